"""Damped Gauss-Newton solution of the strip equation."""

import logging

import numpy as np
from scipy.sparse.linalg import lsqr

from convnls.utils.errors import StripSolveError
from convnls.spectral.fields import basis_field
from convnls.spectral.norms import inner_complex, normalize, tangent_projection, align_phase
from convnls.floer.grid import StripGrid
from convnls.floer.residual import StripOperator, as_complex_array, as_real_vector

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)

ARMIJO_C1 = 1e-4


def align_columns(comoving, n):
    """Fix the phase gauge of a co-moving strip.

    Each interior column is rotated by a common phase maximizing Re <previous column, column>,
    and the boundary nodes are set to u0_n, phase aligned with their interior neighbours.

    Parameters
    ----------
    comoving : 3d array
        Co-moving strip values, of shape (n_s, n_t, 2k+1).
    n : int
        Asymptotic mode.

    Returns
    -------
    aligned : 3d array
        Gauge-fixed strip values.
    """

    aligned = np.array(comoving, dtype=complex)
    k = (aligned.shape[-1] - 1) // 2

    for col in range(2, aligned.shape[0] - 1):

        overlap = np.sum(inner_complex(aligned[col - 1], aligned[col]))

        if abs(overlap) > 0:
            aligned[col] *= np.conj(overlap) / abs(overlap)

    anchor = np.broadcast_to(basis_field(n, k), aligned.shape[1:])
    aligned[0] = align_phase(anchor, aligned[1])
    aligned[-1] = align_phase(anchor, aligned[-2])

    return aligned


def solve_strip(system, grid, tol_res=1e-8, max_iter=50, min_step=1/32, lsqr_tol=1e-10,
                lsqr_iter=2000, return_info=False):
    """Solve the strip equation at the cut-off of a grid by damped Gauss-Newton.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    grid : StripGrid
        Initial guess. Its cut-off parameter T sets the equation.
    tol_res : float, optional, default: 1e-8
        Residual norm at which the solve has converged.
    max_iter : int, optional, default: 50
        Largest number of Gauss-Newton steps.
    min_step : float, optional, default: 1/32
        Smallest damping factor of the backtracking line search.
    lsqr_tol : float, optional, default: 1e-10
        Tolerance of the inner least squares solves.
    lsqr_iter : int, optional, default: 2000
        Iteration cap of the inner least squares solves.
    return_info : bool, optional, default: False
        Whether to also return a dictionary with the 'iterations' and 'residual'.

    Returns
    -------
    solution : StripGrid
        Converged strip.
    info : dict
        Solver diagnostics, only returned if requested.

    Raises
    ------
    StripSolveError
        If the line search fails or the iteration cap is reached. The error carries the best
        strip found so far.

    Notes
    -----
    Each step solves the linearized equation in the least squares sense on horizontal
    updates, using LSQR on the Jacobian-vector products. After each step the nodes are
    renormalized to the unit sphere and the phase gauge is fixed by :func:`align_columns`.
    """

    oper = StripOperator(system, grid)
    comoving = grid.comoving()

    res, unproj = oper.residual(comoving)
    res_norm = oper.norm(res)

    def as_grid(vals):
        return StripGrid.from_comoving(vals, grid.S, grid.T, grid.n)

    n_iter = 0
    while res_norm > tol_res:

        if n_iter == max_iter:
            raise StripSolveError('Strip solve reached the iteration cap with residual '
                                  '{:.3g} at T={}.'.format(res_norm, grid.T),
                                  grid=as_grid(comoving), residual=res_norm, iterations=n_iter)

        jac = oper.linearize(comoving, unproj)
        sol = lsqr(jac, -as_real_vector(res), atol=lsqr_tol, btol=lsqr_tol,
                   iter_lim=lsqr_iter)[0]

        update = np.zeros_like(comoving)
        update[1:-1] = as_complex_array(sol, res.shape)
        update = tangent_projection(comoving, update)

        step = 1.
        while True:

            trial = align_columns(normalize(comoving + step * update), grid.n)
            trial_res, trial_unproj = oper.residual(trial)
            trial_norm = oper.norm(trial_res)

            if trial_norm <= (1 - ARMIJO_C1 * step) * res_norm:
                break

            step /= 2
            if step < min_step:
                raise StripSolveError('Strip line search failed with residual {:.3g} '
                                      'at T={}.'.format(res_norm, grid.T),
                                      grid=as_grid(comoving), residual=res_norm,
                                      iterations=n_iter)

        comoving, res, unproj, res_norm = trial, trial_res, trial_unproj, trial_norm
        n_iter += 1

        logger.debug('Strip Gauss-Newton step %d at T=%g: residual %.3g, damping %g',
                     n_iter, grid.T, res_norm, step)

    solution = grid.copy() if n_iter == 0 else as_grid(comoving)

    if return_info:
        return solution, {'iterations': n_iter, 'residual': res_norm}

    return solution
