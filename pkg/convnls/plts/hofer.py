"""Plot Hofer norm certificates."""

import matplotlib.pyplot as plt

from neurodsp.plts.utils import savefig

###################################################################################################
###################################################################################################

@savefig
def plot_hofer_certificate(certificate, ax=None, **kwargs):
    """Plot the extrema max H_t and min H_t at each quadrature node.

    Parameters
    ----------
    certificate : pandas.DataFrame
        Certificate of a :class:`~.HoferEstimate`.
    ax : matplotlib.Axes, optional
        Figure axes upon which to plot.
    **kwargs
        Keyword arguments to pass into `matplotlib.pyplot.plot`.

    Notes
    -----
    Nodes where an inner optimization did not converge are marked with a cross.
    """

    figsize = kwargs.pop('figsize', (8, 4))
    fontsize = kwargs.pop('fontsize', 15)
    alpha = kwargs.pop('alpha', .25)

    if ax is None:
        fig, ax = plt.subplots(figsize=figsize)

    times = certificate['t']

    ax.plot(times, certificate['h_max'], marker='o', label='max', **kwargs)
    ax.plot(times, certificate['h_min'], marker='o', label='min', **kwargs)
    ax.fill_between(times, certificate['h_min'], certificate['h_max'], alpha=alpha)

    for side in ('max', 'min'):
        failed = ~certificate['converged_' + side].astype(bool)
        if failed.any():
            ax.scatter(times[failed], certificate['h_' + side][failed], marker='x',
                       color='r', s=80, zorder=3)

    ax.set_xlabel('t', size=fontsize)
    ax.set_ylabel('H_t', size=fontsize)
    ax.legend(fontsize=fontsize * .75)
