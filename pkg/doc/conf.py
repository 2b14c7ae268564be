"""Sphinx configuration for the convnls documentation site."""

from datetime import date

import sphinx_bootstrap_theme
from sphinx_gallery.sorting import FileNameSortKey

from convnls import __version__

# -- Project information -----------------------------------------------------

project = 'convnls'
copyright = '2026-{}, convnls developers'.format(date.today().year)
author = 'convnls developers'

version = __version__
release = version

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
    'sphinx_gallery.gen_gallery',
    'sphinx_copybutton',
    'numpydoc'
]

autosummary_generate = True
templates_path = ['_templates']

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# Avoids duplicate member tables from numpydoc and autosummary
numpydoc_show_class_members = False

autodoc_default_options = {
    'members': None,
    'inherited-members': None,
}

pygments_style = 'sphinx'
copybutton_prompt_text = '$ '

# -- Options for HTML output -------------------------------------------------

html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()

html_theme_options = {
    'navbar_links': [
        ('API', 'api'),
        ('Glossary', 'glossary'),
        ('Tutorial', 'auto_tutorials/index'),
    ],
    'bootswatch_theme': 'flatly',
    'body_max_width': None,
    'navbar_pagenav': False,
    'navbar_sidebarrel': False,
}

html_copy_source = False
html_show_sourcelink = False

# -- Extension configuration -------------------------------------------------

sphinx_gallery_conf = {
    'examples_dirs': ['../tutorials'],
    'gallery_dirs': ['auto_tutorials'],
    'within_subsection_order': FileNameSortKey,
    'backreferences_dir': 'generated',
    'thumbnail_size': (250, 250),
    'doc_module': ('convnls',),
    'reference_url': {'convnls': None},
}

intersphinx_mapping = {
    'neurodsp': ('https://neurodsp-tools.github.io/neurodsp/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}
