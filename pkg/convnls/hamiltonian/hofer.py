"""Estimate Hofer norms of time-dependent Hamiltonians on the unit sphere."""

import warnings
from functools import partial
from multiprocessing import Pool, cpu_count

import numpy as np
import pandas as pd

from convnls.utils.checks import check_param_options, check_param_range
from convnls.utils.rng import get_rng
from convnls.spectral.fields import basis_field, dispersion_phases, random_fields
from convnls.spectral.norms import compute_norm, normalize, tangent_projection
from convnls.hamiltonian.system import eval_F, grad_F, eval_G, grad_G
from convnls.utils.progress import progress_bar

###################################################################################################
###################################################################################################

# Armijo constants of the projected line search
ARMIJO_C1 = 1e-4
MIN_STEP = 1e-14
MAX_STEP = 1e4


class HoferEstimate:
    """A Hofer norm estimate, with its per-node certificate.

    Attributes
    ----------
    value : float
        Estimated norm, int_0^1 (max H_t - min H_t) dt by Gauss-Legendre quadrature.
    certificate : pandas.DataFrame
        One row per quadrature node, with columns 't', 'weight', 'h_max', 'h_min',
        'converged_max', 'converged_min', 'iterations_max' and 'iterations_min'.
    maximizers, minimizers : 2d array
        Extremizing unit fields, one row per quadrature node.

    Notes
    -----
    Each extremum is found by local optimization from finitely many starts, so the estimate
    is a lower bound of the true norm.
    """

    def __init__(self, value, certificate, maximizers, minimizers):

        self.value = float(value)
        self.certificate = certificate
        self.maximizers = maximizers
        self.minimizers = minimizers


    def __repr__(self):

        return 'HoferEstimate(value={:.6g}, converged={})'.format(self.value, self.converged)


    def __float__(self):

        return self.value


    @property
    def converged(self):
        """Whether every inner optimization converged."""

        return bool(self.certificate['converged_max'].all() and
                    self.certificate['converged_min'].all())


class _Objective:
    """Signed sum of Hamiltonians of several systems, with its gradient."""

    def __init__(self, systems, signs, which):

        self.systems = systems
        self.signs = signs
        self.which = which


    def value(self, field, t):

        func = eval_F if self.which == 'F' else eval_G

        return sum(sign * func(system, field, t)
                   for system, sign in zip(self.systems, self.signs))


    def grad(self, field, t):

        func = grad_F if self.which == 'F' else grad_G

        return sum(sign * func(system, field, t)
                   for system, sign in zip(self.systems, self.signs))


def hofer_norm(system, which='G', n_nodes=8, n_starts=32, tol=1e-9, max_iter=5000,
               seed=0, n_jobs=1, progress=None):
    """Estimate the Hofer norm of F or G on the unit sphere of the truncated field space.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    which : {'G', 'F'}, optional, default: 'G'
        Hamiltonian whose norm is estimated.
    n_nodes : int, optional, default: 8
        Number of Gauss-Legendre nodes in t.
    n_starts : int, optional, default: 32
        Number of random starts per extremum, in addition to the structured starts u0_n.
    tol : float, optional, default: 1e-9
        Projected gradient norm at which an optimization has converged.
    max_iter : int, optional, default: 5000
        Iteration cap of each optimization.
    seed : int, optional, default: 0
        Seed of the random starts.
    n_jobs : int, optional, default: 1
        Number of jobs to compute extrema in parallel. -1 uses all cores.
    progress : {None, 'tqdm', 'tqdm.notebook'}
        Progress bar over quadrature nodes.

    Returns
    -------
    estimate : HoferEstimate
        Estimated norm with its certificate.

    Notes
    -----
    The starts of the G estimate at node t are the starts of the F estimate rotated by the
    free flow phi0_t, so both estimates follow the same trajectories on the sphere.

    Examples
    --------
    >>> from convnls.spectral import make_admissible_kernel
    >>> from convnls.hamiltonian import HamiltonianSystem, ZeroDensity
    >>> psi = make_admissible_kernel(0.5, 2)
    >>> estimate = hofer_norm(HamiltonianSystem(psi, ZeroDensity(), 2), n_nodes=2, n_starts=2)
    >>> estimate.value
    0.0
    """

    return _estimate(_Objective([system], [1.], which), system.k, which, n_nodes, n_starts,
                     tol, max_iter, seed, n_jobs, progress)


def hofer_gap(system, k, l, which='G', **hofer_kwargs):
    """Estimate the Hofer norm of the difference between two kernel truncations.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system, whose field space holds both truncations.
    k, l : int
        Kernel cut-offs, with l <= k <= system.k.
    which : {'G', 'F'}, optional, default: 'G'
        Hamiltonian whose difference is estimated.
    **hofer_kwargs
        Keyword arguments of :func:`hofer_norm`.

    Returns
    -------
    estimate : HoferEstimate
        Estimate of |||G^k - G^l|||.
    """

    if l > k or k > system.k:
        raise ValueError('Kernel cut-offs must satisfy l <= k <= system.k.')

    objective = _Objective([system.with_kernel_modes(k), system.with_kernel_modes(l)],
                           [1., -1.], which)

    defaults = dict(n_nodes=8, n_starts=32, tol=1e-9, max_iter=5000, seed=0,
                    n_jobs=1, progress=None)
    defaults.update(hofer_kwargs)

    return _estimate(objective, system.k, which, **defaults)


def _estimate(objective, k, which, n_nodes, n_starts, tol, max_iter, seed, n_jobs, progress):

    check_param_options(which, 'which', ['F', 'G'])
    check_param_range(n_nodes, 'n_nodes', (1, np.inf))
    check_param_range(n_starts, 'n_starts', (0, np.inf))

    nodes, weights = np.polynomial.legendre.leggauss(n_nodes)
    times, weights = (nodes + 1) / 2, weights / 2

    structured = np.array([basis_field(mode, k) for mode in range(-k, k + 1)])
    rand = random_fields(get_rng(seed, stream=0), k, n_starts) if n_starts > 0 \
        else np.zeros((0, 2 * k + 1), dtype=complex)
    starts = np.vstack([structured, rand])

    n_jobs = cpu_count() if n_jobs == -1 else n_jobs

    jobs = [(time, sign) for time in times for sign in (1., -1.)]
    extremize = partial(_extremize, objective=objective, starts=starts,
                        tol=tol, max_iter=max_iter)

    if n_jobs == 1:
        results = list(progress_bar(map(extremize, jobs), progress, len(jobs)))
    else:
        with Pool(processes=n_jobs) as pool:
            results = list(progress_bar(pool.imap(extremize, jobs), progress, len(jobs)))

    h_max, h_min = results[0::2], results[1::2]

    certificate = pd.DataFrame({
        't': times,
        'weight': weights,
        'h_max': [res[1] for res in h_max],
        'h_min': [res[1] for res in h_min],
        'converged_max': [res[2] for res in h_max],
        'converged_min': [res[2] for res in h_min],
        'iterations_max': [res[3] for res in h_max],
        'iterations_min': [res[3] for res in h_min]
    })

    value = np.sum(weights * (certificate['h_max'].values - certificate['h_min'].values))

    estimate = HoferEstimate(value, certificate, np.array([res[0] for res in h_max]),
                             np.array([res[0] for res in h_min]))

    if not estimate.converged:
        warnings.warn('Some inner optimizations of the Hofer norm estimate did not converge, '
                      'see the certificate.')

    return estimate


def _extremize(job, objective, starts, tol, max_iter):
    """Best extremum of one sign at one time, over all starts."""

    time, sign = job

    if objective.which == 'G':
        starts = starts * dispersion_phases(starts.shape[-1] // 2, time)

    best = None
    for start in starts:

        result = _ascend(objective, start, time, sign, tol, max_iter)

        if best is None or sign * result[1] > sign * best[1]:
            best = result

    return best


def _ascend(objective, start, time, sign, tol, max_iter):
    """Projected gradient ascent of sign * H_t on the unit sphere, with backtracking.

    Returns
    -------
    field : 1d array
        Final iterate.
    value : float
        Hamiltonian value at the final iterate.
    converged : bool
        Whether the projected gradient norm reached the tolerance.
    n_iter : int
        Number of iterations.

    Notes
    -----
    Steps are accepted on the Armijo condition. Once the Armijo gain is below the rounding
    error of the value, a step is accepted if it decreases the projected gradient norm.
    """

    def projected(field):
        direction = tangent_projection(field, sign * objective.grad(field, time))
        return direction, compute_norm(direction)

    field = normalize(start)
    value = sign * objective.value(field, time)
    direction, gnorm = projected(field)
    step = 1.

    converged = False
    for n_iter in range(max_iter + 1):

        if gnorm <= tol:
            converged = True
            break

        if n_iter == max_iter:
            break

        noise = 4 * np.finfo(float).eps * (1 + abs(value))

        while step >= MIN_STEP:

            candidate = normalize(field + step * direction)
            cand_value = sign * objective.value(candidate, time)
            gain = ARMIJO_C1 * step * gnorm ** 2

            if gain > noise:
                if cand_value >= value + gain:
                    cand_direction, cand_gnorm = projected(candidate)
                    break

            elif cand_value >= value - noise:
                cand_direction, cand_gnorm = projected(candidate)
                if cand_gnorm < gnorm:
                    break

            step /= 2

        if step < MIN_STEP:
            break

        field, value = candidate, cand_value
        direction, gnorm = cand_direction, cand_gnorm
        step = min(2 * step, MAX_STEP)

    return field, float(sign * value), converged, n_iter
