"""Gauss-Newton refinement of projective fixed points of the time-one map."""

import logging

import numpy as np
from scipy.linalg import null_space
from scipy.sparse.linalg import cg

from convnls.utils.errors import NewtonError
from convnls.spectral.fields import as_coeffs
from convnls.spectral.norms import compute_norm, inner_complex, normalize, projective_distance
from convnls.hamiltonian.system import eval_F
from convnls.flow.integrate import time_one_map, tangent_time_one
from convnls.fixedpoint.records import FixedPointRecord, multiplier_of

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)

ARMIJO_C1 = 1e-4
N_ACTION_NODES = 8


def horizontal_basis(field):
    """Orthonormal basis, as complex vectors, of the real complement of span{u, iu}.

    Parameters
    ----------
    field : 1d array
        Nonzero field u with 2k+1 coefficients.

    Returns
    -------
    basis : 2d array
        Array of shape (4k, 2k+1).
    """

    field = as_coeffs(field)
    constraints = np.vstack([np.stack([field.real, field.imag], axis=-1).ravel(),
                             np.stack([-field.imag, field.real], axis=-1).ravel()])

    cols = null_space(constraints)

    return (cols[0::2] + 1j * cols[1::2]).T


def _evaluate(spec, field):

    mapped = time_one_map(spec, field)
    multiplier, overlap = multiplier_of(field, mapped)
    res = mapped - multiplier * field

    return mapped, multiplier, overlap, res, float(compute_norm(res))


def hamiltonian_average(system, field):
    """Time average int_0^1 F_t(u) dt, by Gauss-Legendre quadrature."""

    nodes, weights = np.polynomial.legendre.leggauss(N_ACTION_NODES)

    return float(np.sum(weights / 2 * eval_F(system, field, (nodes + 1) / 2)))


def refine_newton(spec, u0, tol=1e-9, max_iter=20, min_step=1/64, cg_tol=1e-12,
                  n=None, action_slice=None, T_source=None):
    """Refine a candidate to a projective fixed point phi_1(u) = lambda u.

    Parameters
    ----------
    spec : FlowSpec
        Integration settings of the time-one map.
    u0 : 1d array or FourierField
        Unit-norm candidate.
    tol : float, optional, default: 1e-9
        Residual norm ||phi_1(u) - lambda u|| at which refinement has converged.
    max_iter : int, optional, default: 20
        Iteration cap.
    min_step : float, optional, default: 1/64
        Smallest damping factor of the backtracking line search.
    cg_tol : float, optional, default: 1e-12
        Relative tolerance of the conjugate gradient solves of the normal equations.
    n : int, optional
        Mode label of the candidate.
    action_slice : float, optional
        Strip action at the slice the candidate came from.
    T_source : float, optional
        Cut-off parameter of the source strip.

    Returns
    -------
    record : FixedPointRecord
        Refined fixed point. Its action drift is the change of the averaged Hamiltonian
        between the candidate and the refined point.

    Raises
    ------
    NewtonError
        If the line search fails or the iteration cap is reached, carrying the best iterate.

    Notes
    -----
    Updates are restricted to the complement of span{u, iu}, so the phase gauge of the
    candidate is kept. Jacobian columns are obtained in one batched variational integration.
    """

    field = np.array(as_coeffs(u0), dtype=complex)

    if abs(compute_norm(field) - 1) > 1e-10:
        raise ValueError('The candidate must have unit norm.')

    start = field.copy()
    mapped, multiplier, overlap, res, res_norm = _evaluate(spec, field)

    n_iter = 0
    while res_norm > tol:

        if n_iter == max_iter:
            raise NewtonError('Newton refinement reached the iteration cap with residual '
                              '{:.3g}.'.format(res_norm), iterate=field, residual=res_norm)

        basis = horizontal_basis(field)
        tangents = tangent_time_one(spec, field, basis)

        d_overlap = inner_complex(basis, mapped) + inner_complex(field, tangents)
        d_mult = 1j * np.imag(np.conj(multiplier) * d_overlap) * multiplier / abs(overlap)
        columns = tangents - d_mult[:, None] * field[None, :] - multiplier * basis

        jac = np.stack([columns.real, columns.imag], axis=-1).reshape(len(basis), -1).T
        rhs = np.stack([res.real, res.imag], axis=-1).ravel()

        coefs, _ = cg(jac.T @ jac, -jac.T @ rhs, rtol=cg_tol, atol=0., maxiter=10 * len(basis))
        direction = coefs @ basis

        step = 1.
        while True:

            trial = normalize(field + step * direction)
            evaluated = _evaluate(spec, trial)

            if evaluated[-1] <= (1 - ARMIJO_C1 * step) * res_norm:
                break

            step /= 2
            if step < min_step:
                raise NewtonError('Newton line search failed with residual '
                                  '{:.3g}.'.format(res_norm), iterate=field, residual=res_norm)

        field = trial
        mapped, multiplier, overlap, res, res_norm = evaluated
        n_iter += 1

        logger.debug('Newton step %d: residual %.3g, damping %g', n_iter, res_norm, step)

    system = spec.system
    drift = 0. if n_iter == 0 or system.is_free else \
        hamiltonian_average(system, field) - hamiltonian_average(system, start)

    return FixedPointRecord(field, res_norm, multiplier, n=n, action_slice=action_slice,
                            action_drift=drift, T_source=T_source,
                            displacement=float(projective_distance(start, field)),
                            iterations=n_iter)
