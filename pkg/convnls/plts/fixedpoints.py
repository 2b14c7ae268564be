"""Plot fixed point catalogs."""

import numpy as np
import matplotlib.pyplot as plt

from neurodsp.plts.utils import savefig

from convnls.fixedpoint.records import FLAG_NOT_CERTIFIED, FLAG_TRIVIAL

###################################################################################################
###################################################################################################

@savefig
def plot_catalog(df_catalog, show_free=True, ax=None, **kwargs):
    """Plot the action of each cataloged fixed point against its mode.

    Parameters
    ----------
    df_catalog : pandas.DataFrame
        Catalog table, from :func:`~.label_and_separate`.
    show_free : bool, optional, default: True
        Whether to draw the free actions n^2 / 2 for reference.
    ax : matplotlib.Axes, optional
        Figure axes upon which to plot.
    **kwargs
        Keyword arguments to pass into `matplotlib.pyplot.scatter`.

    Notes
    -----
    Certified points are drawn filled, uncertified ones hollow and trivial-coincident ones
    with a cross.
    """

    figsize = kwargs.pop('figsize', (8, 4))
    fontsize = kwargs.pop('fontsize', 15)
    size = kwargs.pop('s', 60)

    if ax is None:
        fig, ax = plt.subplots(figsize=figsize)

    flags = df_catalog['flags'].fillna('')
    trivial = flags.str.contains(FLAG_TRIVIAL, regex=False).values
    uncertified = flags.str.contains(FLAG_NOT_CERTIFIED, regex=False).values & ~trivial
    certified = ~(trivial | uncertified)

    modes = df_catalog['n'].values.astype(float)
    actions = df_catalog['action'].values.astype(float)

    ax.scatter(modes[certified], actions[certified], s=size, color='k', label='certified',
               **kwargs)
    ax.scatter(modes[uncertified], actions[uncertified], s=size, facecolors='none',
               edgecolors='k', label='not certified', **kwargs)
    ax.scatter(modes[trivial], actions[trivial], s=size, marker='x', color='r',
               label='trivial', **kwargs)

    if show_free and len(modes) > 0:
        grid = np.linspace(np.nanmin(modes), np.nanmax(modes), 200)
        ax.plot(grid, grid ** 2 / 2, color='gray', ls='--', label='n^2 / 2')

    ax.set_xlabel('n', size=fontsize)
    ax.set_ylabel('action', size=fontsize)
    ax.legend(fontsize=fontsize * .75)
