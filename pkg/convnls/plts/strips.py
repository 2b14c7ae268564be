"""Plot strip solutions."""

import numpy as np
import matplotlib.pyplot as plt

from neurodsp.plts.utils import savefig

from convnls.spectral.fields import get_modes

###################################################################################################
###################################################################################################

@savefig
def plot_strip_modes(grid, t_index=0, floor=1e-16, ax=None, **kwargs):
    """Plot log10 |c_m(s, t)| of a strip over s and the modes m, at a fixed t.

    Parameters
    ----------
    grid : StripGrid
        Strip.
    t_index : int, optional, default: 0
        Row of the strip to plot.
    floor : float, optional, default: 1e-16
        Smallest plotted modulus.
    ax : matplotlib.Axes, optional
        Figure axes upon which to plot.
    **kwargs
        Keyword arguments to pass into `matplotlib.pyplot.pcolormesh`.
    """

    figsize = kwargs.pop('figsize', (10, 4))
    fontsize = kwargs.pop('fontsize', 15)
    cmap = kwargs.pop('cmap', 'magma')

    if ax is None:
        fig, ax = plt.subplots(figsize=figsize)

    modulus = np.log10(np.maximum(np.abs(grid.values[:, t_index]), floor))

    mesh = ax.pcolormesh(grid.s, get_modes(grid.k), modulus.T, cmap=cmap, shading='nearest',
                         **kwargs)
    plt.colorbar(mesh, ax=ax, label='log10 |c_m|')

    ax.axvline(-grid.T, color='w', ls='--')
    ax.axvline(grid.T, color='w', ls='--')

    ax.set_xlabel('s', size=fontsize)
    ax.set_ylabel('mode', size=fontsize)


@savefig
def plot_node_norms(grid, ax=None, **kwargs):
    """Plot the deviation of strip node norms from one, per row of t.

    Parameters
    ----------
    grid : StripGrid
        Strip.
    ax : matplotlib.Axes, optional
        Figure axes upon which to plot.
    **kwargs
        Keyword arguments to pass into `matplotlib.pyplot.plot`.
    """

    figsize = kwargs.pop('figsize', (8, 4))
    fontsize = kwargs.pop('fontsize', 15)
    alpha = kwargs.pop('alpha', .5)

    if ax is None:
        fig, ax = plt.subplots(figsize=figsize)

    deviation = grid.node_norms() - 1

    ax.plot(grid.s, deviation, alpha=alpha, **kwargs)

    ax.set_xlabel('s', size=fontsize)
    ax.set_ylabel('norm - 1', size=fontsize)
