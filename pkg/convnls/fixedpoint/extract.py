"""Extract fixed point candidates from converged strips."""

import numpy as np

from convnls.floer.functionals import best_slice, action_profile

###################################################################################################
###################################################################################################

def extract_candidate(state, orientation=-1, return_slice=False):
    """Take the t = 0 node of the strip column with the smallest slice defect.

    Parameters
    ----------
    state : ContinuationState
        Continuation that reached its final T.
    orientation : {-1, 1}, optional, default: -1
        Orientation of the symplectic area term of the action.
    return_slice : bool, optional, default: False
        Whether to also return a dictionary describing the slice, with keys 's0', 'defect',
        'action' and 'T'.

    Returns
    -------
    candidate : 1d array
        Unit field u with phi_1(u) close to a multiple of u.
    info : dict
        Slice description, only returned if requested.

    Examples
    --------
    For a free system the strip is constant and the candidate is the free fixed point:

    >>> from convnls.spectral import make_admissible_kernel, basis_field
    >>> from convnls.hamiltonian import HamiltonianSystem, ZeroDensity
    >>> from convnls.floer import continue_in_T
    >>> system = HamiltonianSystem(make_admissible_kernel(0.5, 2), ZeroDensity(), 2)
    >>> state = continue_in_T(system, 1, [0., 1.], n_s=12, n_t=4, hofer=0.)
    >>> bool((extract_candidate(state) == basis_field(1, 2)).all())
    True
    """

    grid, system = state.grid, state.system

    s0, defect = best_slice(system, grid)
    col = int(np.argmin(np.abs(grid.s - s0)))

    candidate = grid.values[col, 0].copy()

    if not return_slice:
        return candidate

    profile = action_profile(system, grid, orientation)
    info = {'s0': s0, 'defect': defect, 'action': float(profile['action'].values[col]),
            'T': grid.T}

    return candidate, info
