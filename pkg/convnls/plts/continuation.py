"""Plot continuation logs and action profiles."""

import numpy as np
import matplotlib.pyplot as plt

from neurodsp.plts.utils import savefig

###################################################################################################
###################################################################################################

@savefig
def plot_continuation_log(df_log, columns=('residual', 'energy', 'defect_min'), ax=None,
                          **kwargs):
    """Plot diagnostics of accepted strips against the cut-off parameter.

    Parameters
    ----------
    df_log : pandas.DataFrame
        Continuation log, from :attr:`~.ContinuationState.log`.
    columns : tuple of str, optional
        Log columns to plot.
    ax : matplotlib.Axes, optional
        Figure axes upon which to plot.
    **kwargs
        Keyword arguments to pass into `matplotlib.pyplot.plot`.

    Notes
    -----
    Residuals and defects are plotted on a log scale when they are the only columns.

    Examples
    --------
    Plot the log of a continuation of the free strip:

    >>> from convnls.spectral import make_admissible_kernel
    >>> from convnls.hamiltonian import HamiltonianSystem, ZeroDensity
    >>> from convnls.floer import continue_in_T
    >>> system = HamiltonianSystem(make_admissible_kernel(0.5, 3), ZeroDensity(), 3)
    >>> state = continue_in_T(system, 1, [0, 1], n_s=16, n_t=4, hofer=0.)
    >>> plot_continuation_log(state.log)
    """

    figsize = kwargs.pop('figsize', (8, 4))
    fontsize = kwargs.pop('fontsize', 15)
    marker = kwargs.pop('marker', 'o')

    if ax is None:
        fig, ax = plt.subplots(figsize=figsize)

    for column in columns:
        ax.plot(df_log['T'], df_log[column], marker=marker, label=column, **kwargs)

    if set(columns) <= {'residual', 'defect_min'} and np.all(df_log[list(columns)] > 0):
        ax.set_yscale('log')

    ax.set_xlabel('T', size=fontsize)
    ax.legend(fontsize=fontsize * .75)


@savefig
def plot_action_profiles(profiles, T_values=None, ax=None, **kwargs):
    """Plot action profiles A(s) of strips at several cut-offs.

    Parameters
    ----------
    profiles : dict
        Action profiles keyed by T, as in :attr:`~.ContinuationState.profiles`.
    T_values : list of float, optional
        Cut-offs to plot. Defaults to all.
    ax : matplotlib.Axes, optional
        Figure axes upon which to plot.
    **kwargs
        Keyword arguments to pass into `matplotlib.pyplot.plot`.
    """

    figsize = kwargs.pop('figsize', (8, 4))
    fontsize = kwargs.pop('fontsize', 15)
    cmap = plt.get_cmap(kwargs.pop('cmap', 'viridis'))

    T_values = sorted(profiles) if T_values is None else T_values

    if ax is None:
        fig, ax = plt.subplots(figsize=figsize)

    for idx, T_val in enumerate(T_values):
        color = cmap(idx / max(len(T_values) - 1, 1))
        ax.plot(profiles[T_val]['s'], profiles[T_val]['action'], color=color,
                label='T={:g}'.format(T_val), **kwargs)

    ax.set_xlabel('s', size=fontsize)
    ax.set_ylabel('action', size=fontsize)

    if len(T_values) <= 8:
        ax.legend(fontsize=fontsize * .75)


@savefig
def plot_continuation_summary(state, figsize=(15, 4)):
    """Plot the continuation log next to the action profiles of a run.

    Parameters
    ----------
    state : ContinuationState
        Continuation state.
    figsize : tuple of (float, float), optional, default: (15, 4)
        Size of the figure.
    """

    fig, axes = plt.subplots(figsize=figsize, ncols=2)

    plot_continuation_log(state.log, ax=axes[0])
    plot_action_profiles(state.profiles, ax=axes[1])

    axes[0].set_title('Strip n={}'.format(state.n))
    axes[1].set_title('T={:g}'.format(state.T))
