"""convnls setup script."""

import os
from setuptools import setup, find_packages

# Get the current version number from inside the module
with open(os.path.join('convnls', 'version.py')) as version_file:
    exec(version_file.read())

# Load the long description from the README
with open('README.rst') as readme_file:
    long_description = readme_file.read()

# Load the required dependencies from the requirements file
with open("requirements.txt") as requirements_file:
    install_requires = [req for req in requirements_file.read().splitlines()]

setup(
    name = 'convnls',
    version = __version__,
    description = 'Spectral simulation and Floer continuation for convolution-type NLS on the circle.',
    long_description = long_description,
    python_requires = '>=3.9',
    packages = find_packages(),
    license = 'Apache License, 2.0',
    classifiers = [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11'
    ],
    platforms = 'any',
    keywords = ['hamiltonian pde', 'nonlinear schrodinger', 'floer homology',
                'fixed points', 'spectral methods', 'hofer norm'],
    install_requires = install_requires,
    tests_require = ['pytest'],
    entry_points = {'console_scripts': ['convnls=convnls.cli.main:main']}
)
