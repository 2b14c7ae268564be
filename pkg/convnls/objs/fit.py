"""Convnls class objects."""

import numpy as np

from neurodsp.plts.utils import savefig

from convnls.floer.grid import DEFAULT_MARGIN
from convnls.floer.continuation import ContinuationState, continue_in_T, check_schedule
from convnls.floer.snapshots import load_snapshot, save_snapshot
from convnls.fixedpoint.extract import extract_candidate
from convnls.fixedpoint.catalog import save_catalog
from convnls.group import compute_fixed_points
from convnls.plts import plot_continuation_summary, plot_catalog

###################################################################################################
###################################################################################################

class Strips:
    """Continue a Floer strip in the cut-off parameter and extract its fixed point candidate.

    Attributes
    ----------
    state : ContinuationState
        Continuation state after fitting.
    system : HamiltonianSystem
        Hamiltonian system.
    n : int
        Asymptotic mode of the strip.
    schedule : list of float
        Values 0 = T_0 < ... < T_max of the cut-off parameter.
    tol_res : float
        Residual tolerance of accepted strips.
    n_s, n_t : int
        Number of strip nodes in s and t.
    margin : float
        Margin of the strip past the support of the cut-off at T_max.
    orientation : {-1, 1}
        Orientation of the symplectic area term of the action.
    solver_kwargs : dict
        Keyword arguments of :func:`~.solve_strip`.
    """

    def __init__(self, schedule, tol_res=1e-8, n_s=64, n_t=16, margin=DEFAULT_MARGIN,
                 orientation=-1, solver_kwargs=None):
        """Initialize object settings."""

        self.schedule = check_schedule(schedule)
        self.tol_res = tol_res
        self.n_s = n_s
        self.n_t = n_t
        self.margin = margin
        self.orientation = orientation
        self.solver_kwargs = {} if solver_kwargs is None else solver_kwargs

        self.system = None
        self.n = None

        # Results
        self.state = None


    def fit(self, system, n, hofer=None, snapshot_dir=None):
        """Run the continuation from the constant strip at mode n.

        Parameters
        ----------
        system : HamiltonianSystem
            Hamiltonian system.
        n : int
            Asymptotic mode.
        hofer : float or HoferEstimate, optional
            Hofer norm estimate of G. Computed if not given.
        snapshot_dir : str, optional
            Directory to write snapshots of accepted strips to.
        """

        self.system = system
        self.n = n

        self.state = continue_in_T(system, n, self.schedule, tol_res=self.tol_res,
                                   n_s=self.n_s, n_t=self.n_t, margin=self.margin, hofer=hofer,
                                   orientation=self.orientation, snapshot_dir=snapshot_dir,
                                   solver_kwargs=self.solver_kwargs)


    def resume(self, hofer=None, snapshot_dir=None):
        """Continue a loaded or interrupted state through the rest of the schedule."""

        self._check_fit()

        self.state = continue_in_T(self.system, self.n, self.schedule, tol_res=self.tol_res,
                                   hofer=hofer if hofer is not None else self.state.hofer,
                                   orientation=self.orientation, snapshot_dir=snapshot_dir,
                                   state=self.state, solver_kwargs=self.solver_kwargs)


    @property
    def grid(self):

        self._check_fit()
        return self.state.grid


    @property
    def log(self):

        self._check_fit()
        return self.state.log


    def extract(self, return_slice=False):
        """Fixed point candidate at the slice with smallest defect, see
        :func:`~.extract_candidate`."""

        self._check_fit()
        return extract_candidate(self.state, self.orientation, return_slice)


    @savefig
    def plot(self, figsize=(15, 4)):
        """Plot the continuation log and the action profiles.

        Parameters
        ----------
        figsize : tuple of (float, float), optional, default: (15, 4)
            Size of the figure.
        """

        self._check_fit()
        plot_continuation_summary(self.state, figsize=figsize)


    def save(self, path):
        """Write the current strip to a JSON snapshot."""

        save_snapshot(self.grid, path)


    def load(self, system, path, hofer=None):
        """Load a strip snapshot as the state to resume from.

        Parameters
        ----------
        system : HamiltonianSystem
            Hamiltonian system the strip solves.
        path : str
            Path of a snapshot written by :meth:`save` or a continuation.
        hofer : float, optional
            Hofer norm estimate of G.
        """

        grid = load_snapshot(path)

        if grid.T > self.schedule[-1]:
            raise ValueError('The snapshot cut-off T={} is past the end of the '
                             'schedule.'.format(grid.T))

        self.system = system
        self.n = grid.n
        self.n_s, self.n_t = grid.n_s, grid.n_t
        self.state = ContinuationState(system, grid, self.schedule, hofer)


    def _check_fit(self):

        if self.state is None:
            raise ValueError('The fit or load method must be successfully called first.')


class FixedPoints:
    """Compute and catalog projective fixed points of the time-one map for several modes.

    Attributes
    ----------
    records : list of FixedPointRecord
        Refined fixed points, sorted by action.
    df_catalog : pandas.DataFrame
        Catalog table, in the order of records.
    states : list of ContinuationState
        Final continuation states, in the order of modes.
    schedule : list of float
        Values 0 = T_0 < ... < T_max of the cut-off parameter.
    continuation_kwargs : dict
        Keyword arguments of :func:`~.continue_in_T`.
    newton_kwargs : dict
        Keyword arguments of :func:`~.refine_newton`.
    orientation : {-1, 1}
        Orientation of the symplectic area term of the action.
    """

    def __init__(self, schedule, continuation_kwargs=None, newton_kwargs=None, orientation=-1):
        """Initialize object settings."""

        self.schedule = check_schedule(schedule)
        self.continuation_kwargs = {} if continuation_kwargs is None else continuation_kwargs
        self.newton_kwargs = {} if newton_kwargs is None else newton_kwargs
        self.orientation = orientation

        self.flow_spec = None
        self.modes = None

        # Results
        self.records = []
        self.df_catalog = None
        self.states = []


    def __len__(self):
        """Define the length of the object."""

        return len(self.records)


    def __iter__(self):
        """Allow for iterating across the object."""

        for record in self.records:
            yield record


    def __getitem__(self, index):
        """Allow for indexing into the object."""

        return self.records[index]


    def fit(self, flow_spec, modes, n_jobs=-1, progress=None):
        """Continue strips, extract and refine fixed points for each mode.

        Parameters
        ----------
        flow_spec : FlowSpec
            Integration settings; its system defines the Hamiltonian.
        modes : list of int
            Asymptotic modes.
        n_jobs : int, optional, default: -1
            The number of modes to process in parallel.
        progress : {None, 'tqdm', 'tqdm.notebook'}
            Specify whether to display a progress bar. Uses 'tqdm', if installed.
        """

        if len(modes) == 0:
            raise ValueError('At least one mode is required.')

        self.flow_spec = flow_spec
        self.modes = list(modes)

        self.records, self.df_catalog, self.states = compute_fixed_points(
            flow_spec, self.modes, self.schedule, self.continuation_kwargs, self.newton_kwargs,
            self.orientation, n_jobs, progress)


    @property
    def actions(self):

        return np.array([record.action for record in self.records])


    def to_json(self, path):
        """Write the catalog to a JSON file."""

        if self.df_catalog is None:
            raise ValueError('The fit method must be successfully called first.')

        save_catalog(self.records, path)


    @savefig
    def plot(self, show_free=True, figsize=(8, 4)):
        """Plot actions of the cataloged fixed points against their modes."""

        if self.df_catalog is None:
            raise ValueError('The fit method must be successfully called prior to plotting.')

        plot_catalog(self.df_catalog, show_free=show_free, figsize=figsize)
