"""Continuation of strip solutions in the cut-off parameter T."""

import os
import logging
import warnings

import numpy as np
import pandas as pd

from convnls.utils.errors import StripSolveError, ContinuationError
from convnls.hamiltonian.hofer import hofer_norm
from convnls.floer.grid import constant_strip, strip_half_width, DEFAULT_MARGIN
from convnls.floer.residual import residual
from convnls.floer.solver import solve_strip
from convnls.floer.functionals import energy, best_slice, action_profile, action_window
from convnls.floer.snapshots import save_snapshot

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)

LOG_COLUMNS = ['T', 'iterations', 'residual', 'energy', 'defect_min', 'action_min',
               'action_max']

# Smallness of the Hofer norm under which strip energies stay below pi/2
HOFER_LIMIT = np.pi / 4


class ContinuationState:
    """Mutable record of a continuation run in T.

    Attributes
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    grid : StripGrid
        Strip at the last accepted T.
    schedule : list of float
        Target values of T.
    records : list of dict
        One entry per accepted T, with the keys of :attr:`log`.
    profiles : dict
        Action profiles, as DataFrames, keyed by accepted T.
    snapshots : list of str
        Paths of written snapshots.
    hofer : float or None
        Hofer norm estimate of G used for the smallness check.
    """

    def __init__(self, system, grid, schedule, hofer=None):

        self.system = system
        self.grid = grid
        self.schedule = list(schedule)
        self.hofer = hofer
        self.records = []
        self.profiles = {}
        self.snapshots = []


    def __repr__(self):

        return 'ContinuationState(n={}, T={}, accepted={})'.format(
            self.n, self.T, len(self.records))


    @property
    def T(self):

        return self.grid.T


    @property
    def n(self):

        return self.grid.n


    @property
    def log(self):
        """Continuation log as a DataFrame.

        The action columns are the extremes of the action profile over |s| <= T.
        """

        return pd.DataFrame(self.records, columns=LOG_COLUMNS)


    @property
    def accepted(self):
        """Accepted values of T, in order."""

        return [record['T'] for record in self.records]


def check_schedule(schedule):
    """Validate a schedule 0 = T_0 < T_1 < ... < T_max."""

    schedule = [float(T_val) for T_val in schedule]

    if len(schedule) == 0 or schedule[0] != 0:
        raise ValueError('The T schedule must start at 0.')

    if np.any(np.diff(schedule) <= 0):
        raise ValueError('The T schedule must be strictly increasing.')

    return schedule


def continue_in_T(system, n, schedule, tol_res=1e-8, min_step=1e-3, n_s=64, n_t=16,
                  margin=DEFAULT_MARGIN, hofer=None, hofer_kwargs=None, orientation=-1,
                  snapshot_dir=None, state=None, solver_kwargs=None):
    """Continue the constant strip at u0_n from T = 0 through a schedule of cut-offs.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    n : int
        Asymptotic mode, with |n| <= k.
    schedule : list of float
        Values 0 = T_0 < T_1 < ... < T_max.
    tol_res : float, optional, default: 1e-8
        Residual tolerance of accepted strips.
    min_step : float, optional, default: 1e-3
        Smallest increment of T before continuation fails.
    n_s, n_t : int, optional, default: 64, 16
        Number of strip nodes in s and t.
    margin : float, optional, default: 5.
        Margin of the strip past the support of the cut-off at T_max.
    hofer : float or HoferEstimate, optional
        Hofer norm estimate of G. If not given, it is computed with hofer_kwargs.
    hofer_kwargs : dict, optional
        Keyword arguments of :func:`~.hofer_norm`.
    orientation : {-1, 1}, optional, default: -1
        Orientation of the symplectic area term of the action.
    snapshot_dir : str, optional
        Directory to write a snapshot of each accepted strip to.
    state : ContinuationState, optional
        State to resume from, for example rebuilt from a snapshot.
    solver_kwargs : dict, optional
        Keyword arguments of :func:`~.solve_strip`.

    Returns
    -------
    state : ContinuationState
        Final state, with the strip at T_max and one record per accepted T.

    Raises
    ------
    ContinuationError
        If the increment of T falls below min_step. The error carries the state.

    Notes
    -----
    Each schedule target is first attempted directly from the last accepted T. On solver
    failure the increment is halved, so the sequence of accepted T only depends on the last
    accepted strip, and resumed runs repeat it.
    """

    if abs(n) > system.k:
        raise ValueError('Mode {} is outside the cut-off k={}.'.format(n, system.k))

    schedule = check_schedule(schedule)
    solver_kwargs = {} if solver_kwargs is None else solver_kwargs

    if hofer is None:
        hofer = hofer_norm(system, 'G', **(hofer_kwargs or {}))
    hofer = float(hofer)

    if hofer >= HOFER_LIMIT:
        warnings.warn('Theorem hypothesis violated: Hofer norm estimate {:.4g} is not '
                      'below pi/4.'.format(hofer))

    if state is None:
        grid = constant_strip(n, system.k, 0., strip_half_width(schedule[-1], margin), n_s, n_t)
        state = ContinuationState(system, grid, schedule, hofer)
        _accept(state, grid, 0, residual(system, grid)[1], orientation, snapshot_dir)
    else:
        state.hofer = hofer

    for target in schedule:

        T_try = target
        while state.T < target:

            try:
                grid, info = solve_strip(system, state.grid.with_T(T_try), tol_res,
                                         return_info=True, **solver_kwargs)

            except StripSolveError as err:

                step = (T_try - state.T) / 2
                logger.info('Strip solve failed at T=%g (residual %.3g), retrying at T=%g',
                            T_try, err.residual, state.T + step)

                if step < min_step:
                    raise ContinuationError('Continuation reached the minimum step {} at '
                                            'T={}.'.format(min_step, state.T),
                                            state=state, residual=err.residual) from err

                T_try = state.T + step
                continue

            _accept(state, grid, info['iterations'], info['residual'], orientation,
                    snapshot_dir)
            T_try = target

    return state


def _accept(state, grid, iterations, res_norm, orientation, snapshot_dir):
    """Record diagnostics of an accepted strip and make it current."""

    system = state.system

    profile = action_profile(system, grid, orientation)
    _, defect = best_slice(system, grid)
    window = action_window(profile, grid.T)

    state.grid = grid
    state.profiles[grid.T] = profile
    state.records.append({'T': grid.T, 'iterations': iterations, 'residual': res_norm,
                          'energy': energy(system, grid), 'defect_min': defect,
                          'action_min': float(window['action'].min()),
                          'action_max': float(window['action'].max())})

    if snapshot_dir is not None:
        path = os.path.join(snapshot_dir, 'strip_n{}_T{:.6f}.json'.format(grid.n, grid.T))
        save_snapshot(grid, path)
        state.snapshots.append(path)

    logger.info('Accepted strip n=%d at T=%g: %d iterations, residual %.3g, energy %.4g',
                grid.n, grid.T, iterations, res_norm, state.records[-1]['energy'])
