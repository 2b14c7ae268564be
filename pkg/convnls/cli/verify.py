"""Property suite over a configured system, reported as JSON and a text summary."""

import os
import json
import logging
import warnings

import numpy as np

from convnls.utils.rng import get_rng
from convnls.utils.errors import NumericalError
from convnls.spectral.fields import random_fields, to_grid, get_modes
from convnls.spectral.kernels import (convolve, truncate_kernel, truncation_error_bound,
                                      truncation_ladder)
from convnls.spectral.norms import compute_norm, inner_real
from convnls.hamiltonian.system import eval_F, grad_F, eval_G, grad_G, X_G
from convnls.hamiltonian.hofer import hofer_norm, hofer_gap
from convnls.flow.free import free_flow, free_fixed_points
from convnls.flow.integrate import FlowSpec, flow_G
from convnls.floer.grid import constant_strip, strip_half_width
from convnls.floer.residual import residual
from convnls.floer.functionals import (energy, energy_identity, best_slice, action_profile,
                                       action_window, normal_split)
from convnls.floer.continuation import HOFER_LIMIT, ContinuationState, continue_in_T
from convnls.floer.snapshots import load_snapshot
from convnls.fixedpoint.extract import extract_candidate
from convnls.fixedpoint.newton import refine_newton
from convnls.fixedpoint.catalog import SEPARATION
from convnls.cli.config import (build_system, build_flow_spec, build_schedule, hofer_kwargs,
                                continuation_kwargs)

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)

# Sample sizes of the randomized checks
N_FIELDS = 100
N_PAIRS = 50
FD_STEP = 1e-5

# Relative discretization slack of the strip bounds, and an absolute floor for vanishing values
STRIP_SLACK = 0.05
ABS_TOL = 1e-12

# Kernel cut-off of the confinement check when no truncation gap is configured
CONFINEMENT_MODES = 2
SHORT_SCHEDULE = [0., 0.5, 1.]


def run_verify(config, out_dir=None, snapshots=None, n_fields=N_FIELDS):
    """Run the property suite on the configured system.

    Parameters
    ----------
    config : RunConfig
        Run configuration.
    out_dir : str, optional
        Directory of the JSON report. Defaults to the 'out' configuration key.
    snapshots : list of str, optional
        Snapshot files to validate and resume from.
    n_fields : int, optional, default: 100
        Number of random fields of the conservation and truncation checks.

    Returns
    -------
    report : dict
        Keys 'passed', 'checks', 'warnings' and 'config_hash'. Each check has a 'name',
        'passed', a measured 'value' and its 'threshold'.

    Raises
    ------
    SnapshotError
        If a snapshot file is corrupted, naming the file.

    Notes
    -----
    Strip checks run on the continuation of 'strip.mode' through the configured schedule,
    and the separation check on the continuations of the 'fixedpoints.modes' above 4.
    Numerical failures of a check are reported as a failed check with an infinite value.
    """

    out_dir = config['out'] if out_dir is None else out_dir
    os.makedirs(out_dir, exist_ok=True)

    system = build_system(config)
    spec = build_flow_spec(config, system)
    rng = get_rng(config['seed'])

    checks = [
        lambda: check_free_multipliers(config['k']),
        lambda: check_conservation(spec, random_fields(rng, system.k, n_fields)),
        lambda: check_perpendicularity(system, random_fields(rng, system.k, n_fields),
                                       rng.uniform(0, 1, n_fields)),
        lambda: check_gradients(system, rng, N_PAIRS),
        lambda: check_truncation_bound(system.psi, random_fields(rng, system.psi.k, n_fields)),
        lambda: check_action_anchor(system),
        lambda: check_rk4_order(system, random_fields(rng, system.k)),
    ]

    report = {'config_hash': config.hash(), 'checks': [], 'warnings': []}

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')

        for check in checks:
            report['checks'].append(check())

        hofer_check = check_hofer(system, hofer_kwargs(config))
        report['checks'].append(hofer_check)
        hofer = hofer_check['hofer_G']

        for check in _strip_checks(system, spec, config, hofer):
            report['checks'].extend(check)

        for path in (snapshots or []):
            report['checks'].extend(_guarded('resume_' + os.path.basename(path), check_resume,
                                             system, path, config, hofer))

    report['warnings'] = [str(warning.message) for warning in caught]
    report['passed'] = all(check['passed'] for check in report['checks'])

    with open(os.path.join(out_dir, 'verify_report.json'), 'w') as f_obj:
        json.dump(report, f_obj, indent=1, default=float)

    for line in summarize(report).splitlines():
        logger.info(line)

    return report


def _strip_checks(system, spec, config, hofer):
    """Strip and fixed point checks, continuing each needed mode once."""

    schedule = build_schedule(config)
    orientation = config['strip.action_orientation']
    strip_kwargs = continuation_kwargs(config)

    states = {}

    def continued(n):
        if n not in states:
            try:
                states[n] = continue_in_T(system, n, schedule, hofer=hofer, **strip_kwargs)
            except NumericalError as err:
                states[n] = err
        if isinstance(states[n], NumericalError):
            raise states[n]
        return states[n]

    mode = config['strip.mode']
    gap_modes = CONFINEMENT_MODES if config['hofer.gap'] is None else config['hofer.gap']
    gap_modes = min(gap_modes, system.kernel_modes)
    separated = sorted({n for n in config['fixedpoints.modes'] if 4 < n <= system.k})

    yield _guarded('strip_bounds', lambda: check_strip_bounds(
        system, continued(mode), hofer, orientation))
    yield _guarded('energy_identity', lambda: check_energy_identity(
        system, continued(mode).grid))
    yield _guarded('residual_gauge', lambda: check_residual_gauge(system, continued(mode).grid))
    yield _guarded('confinement', lambda: check_confinement(
        system, continued(mode), gap_modes,
        hofer_gap(system, system.kernel_modes, gap_modes, 'G', **hofer_kwargs(config)).value,
        **strip_kwargs))
    yield _guarded('fixed_point_closure', lambda: check_fixed_point_closure(
        spec, continued(mode), config['newton.tol'], config['newton.max_iter'], orientation))
    yield _guarded('action_separation', lambda: check_separation(
        system, [continued(n) for n in separated], orientation))
    yield _guarded('strip_order', lambda: check_strip_order(
        system, mode, min(1., schedule[-1]), hofer, **strip_kwargs))


def _guarded(name, check, *args, **kwargs):
    """Run a check, reporting a numerical failure as a failed check."""

    try:
        results = check(*args, **kwargs)
    except NumericalError as err:
        logger.warning('Check %s failed numerically: %s', name, err)
        return [{'name': name, 'passed': False, 'value': np.inf, 'threshold': np.nan,
                 'error': str(err)}]

    return results if isinstance(results, list) else [results]


def summarize(report):
    """Human-readable summary of a verify report."""

    lines = ['{:<26} {:>6} {:>12} {:>12}'.format('check', 'result', 'value', 'threshold')]

    for check in report['checks']:
        lines.append('{:<26} {:>6} {:>12.4g} {:>12.4g}'.format(
            check['name'], 'pass' if check['passed'] else 'FAIL', check['value'],
            check['threshold']))

    for warning in report['warnings']:
        lines.append('warning: {}'.format(warning))

    lines.append('{} of {} checks passed'.format(
        sum(check['passed'] for check in report['checks']), len(report['checks'])))

    return '\n'.join(lines)


def _result(name, value, threshold, **extra):

    value = float(value)
    result = {'name': name, 'passed': bool(value <= threshold), 'value': value,
              'threshold': float(threshold)}
    result.update(extra)

    return result


def check_free_multipliers(k, threshold=1e-14):
    """The free time-one map multiplies u0_n by exp(in^2)."""

    fields, multipliers, _ = free_fixed_points(k)
    error = np.max(np.abs(free_flow(fields, 1.) - multipliers[:, None] * fields))

    return _result('free_multipliers', error, threshold)


def check_conservation(spec, fields, threshold=1e-10):
    """Norm drift of the interaction-picture flow over the configured interval."""

    try:
        final = flow_G(spec, fields)
    except NumericalError as err:
        return _result('norm_conservation', np.inf, threshold, error=str(err))

    return _result('norm_conservation', np.max(np.abs(compute_norm(final) - 1)), threshold)


def check_perpendicularity(system, fields, times, threshold=1e-10):
    """The Hamiltonian vector field is real-orthogonal to the field."""

    overlap = inner_real(fields, X_G(system, fields, times))

    return _result('perpendicularity', np.max(np.abs(overlap)), threshold)


def check_gradients(system, rng, n_pairs, step=FD_STEP, threshold=1e-6):
    """Central differences of F and G against the gradients, relative to |grad| |v|."""

    fields = random_fields(rng, system.k, n_pairs)
    directions = random_fields(rng, system.k, n_pairs)
    times = rng.uniform(0, 1, n_pairs)

    errors = []
    for evaluate, gradient in ((eval_F, grad_F), (eval_G, grad_G)):

        diffs = (evaluate(system, fields + step * directions, times) -
                 evaluate(system, fields - step * directions, times)) / (2 * step)
        grads = gradient(system, fields, times)

        scale = compute_norm(grads) * compute_norm(directions)
        errors.append(np.abs(diffs - inner_real(grads, directions)) / np.maximum(scale, 1e-300))

    return _result('gradients', np.max(errors) if not system.is_free else 0., threshold)


def check_truncation_bound(psi, fields, ks=(2, 4, 8)):
    """Sup-norm truncation error of convolution against the L2 tail bound."""

    df_ladder = truncation_ladder(psi, [k for k in ks if k < psi.k])

    excess = []
    for k, bound in zip(df_ladder['k'], df_ladder['bound']):

        error = np.abs(to_grid(convolve(fields, psi) - convolve(fields, truncate_kernel(psi, k))))
        excess.append(np.max(np.max(error, axis=-1) - bound * compute_norm(fields)))

    return _result('truncation_bound', max(excess) if excess else 0., 1e-12)


def check_action_anchor(system, threshold=1e-12):
    """Constant strips at T = 0 have action n^2 / 2."""

    errors = []
    for n in get_modes(system.k)[system.k:]:
        profile = action_profile(system, constant_strip(int(n), system.k, 0., 1., 8, 4))
        errors.append(np.max(np.abs(profile['action'] - n ** 2 / 2)))

    return _result('action_anchor', max(errors), threshold)


def check_rk4_order(system, field, dt=1 / 256, ratio_range=(14, 18)):
    """Richardson ratio of the fixed-step integrator on dt halving."""

    if system.is_free:
        return _result('rk4_order', 0., 0., ratio=None)

    finals = [flow_G(FlowSpec(system, dt / 2 ** ind, drift_tol=1.), field) for ind in range(3)]
    ratio = compute_norm(finals[0] - finals[1]) / compute_norm(finals[1] - finals[2])

    in_range = ratio_range[0] <= ratio <= ratio_range[1]

    return {'name': 'rk4_order', 'passed': bool(in_range), 'value': float(ratio),
            'threshold': float(ratio_range[1]), 'range': list(ratio_range)}


def check_hofer(system, kwargs):
    """Agreement of the Hofer norm estimates of F and G; warns past pi/4."""

    est_F = hofer_norm(system, 'F', **kwargs)
    est_G = hofer_norm(system, 'G', **kwargs)

    if est_G.value >= HOFER_LIMIT:
        warnings.warn('Theorem hypothesis violated: Hofer norm estimate {:.4g} is not below '
                      'pi/4.'.format(est_G.value))

    threshold = max(2 * kwargs.get('tol', 1e-9), 1e-12 * max(est_G.value, 1.))

    return _result('hofer_F_G', abs(est_F.value - est_G.value), threshold,
                   hofer_F=est_F.value, hofer_G=est_G.value)


def check_strip_bounds(system, state, hofer, orientation=-1, slack=STRIP_SLACK):
    """Energy, smallest slice defect and action window of a converged strip.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    state : ContinuationState
        Continuation at its final T.
    hofer : float
        Hofer norm estimate of G.
    orientation : {-1, 1}, optional, default: -1
        Orientation of the symplectic area term of the action.
    slack : float, optional, default: 0.05
        Relative discretization slack of the bounds.

    Returns
    -------
    results : list of dict
        Checks 'strip_energy' and 'action_window', both against twice the Hofer norm, and
        'slice_defect', against pi / (4T).
    """

    grid = state.grid
    bound = 2 * float(hofer) * (1 + slack) + ABS_TOL

    _, defect = best_slice(system, grid)
    defect_bound = np.pi / (4 * grid.T) * (1 + slack) if grid.T > 0 else np.inf

    window = action_window(action_profile(system, grid, orientation), grid.T)
    deviation = np.max(np.abs(window['action'].values - grid.n ** 2 / 2))

    return [_result('strip_energy', energy(system, grid), bound, T=grid.T),
            _result('slice_defect', defect, defect_bound, T=grid.T),
            _result('action_window', deviation, bound, T=grid.T)]


def check_energy_identity(system, grid, rtol=0.02):
    """The energy of a converged strip against -int int phi_T <grad G_t(u), D_s u>."""

    value = energy(system, grid)
    error = abs(value - energy_identity(system, grid))

    return _result('energy_identity', error, rtol * value + ABS_TOL, energy=value)


def check_residual_gauge(system, grid, threshold=1e-10):
    """The strip residual is real-orthogonal to the gauge direction iu at every node."""

    res, _ = residual(system, grid)
    overlap = inner_real(res, 1j * grid.values[1:-1])

    return _result('residual_gauge', np.max(np.abs(overlap)), threshold)


def check_confinement(system, state, l, gap, slack=STRIP_SLACK, threshold=ABS_TOL,
                      **continuation_kwargs):
    """Strips of a kernel supported in [-l, l] stay in CP^{2l}, and normal energies are small.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    state : ContinuationState
        Continuation of the full system at its final T.
    l : int
        Kernel cut-off, with l <= system.kernel_modes.
    gap : float
        Hofer norm estimate of the difference between the kernel truncations at
        system.kernel_modes and l.
    slack : float, optional, default: 0.05
        Relative discretization slack of the normal energy bound.
    threshold : float, optional, default: 1e-12
        Largest normal coefficient of the strip of the truncated kernel.
    **continuation_kwargs
        Keyword arguments of :func:`~.continue_in_T` for the truncated kernel.

    Returns
    -------
    results : list of dict
        Checks 'confinement' and 'normal_energy'.
    """

    n = state.n if abs(state.n) <= l else l
    truncated = continue_in_T(system.with_kernel_modes(l), n, SHORT_SCHEDULE, hofer=0.,
                              **continuation_kwargs)

    normal = truncated.grid.values[..., np.abs(get_modes(system.k)) > l]
    leak = np.max(np.abs(normal)) if normal.size else 0.

    bound = 2 * gap * (1 + slack) + ABS_TOL
    try:
        normal_energy = normal_split(state.grid, l, system)[2]
    except ValueError as err:
        return [_result('confinement', leak, threshold, l=l, n=n),
                _result('normal_energy', np.inf, bound, l=l, error=str(err))]

    return [_result('confinement', leak, threshold, l=l, n=n),
            _result('normal_energy', normal_energy, bound, l=l, hofer_gap=gap)]


def check_fixed_point_closure(spec, state, tol, max_iter, orientation=-1, threshold=1e-12):
    """Newton refinement of the candidate of a strip closes to a unit multiplier fixed point."""

    candidate, info = extract_candidate(state, orientation, return_slice=True)
    record = refine_newton(spec, candidate, tol=tol, max_iter=max_iter, n=state.n,
                           action_slice=info['action'], T_source=info['T'])

    return [_result('newton_residual', record.residual, tol, iterations=record.iterations,
                    displacement=record.displacement),
            _result('multiplier_modulus', abs(abs(record.multiplier) - 1), threshold)]


def check_separation(system, states, orientation=-1, separation=SEPARATION):
    """Slice actions of strips of distinct modes above 4 are further than pi apart.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    states : list of ContinuationState
        Continuations of distinct modes n > 4, at their final T.
    orientation : {-1, 1}, optional, default: -1
        Orientation of the symplectic area term of the action.
    separation : float, optional, default: pi
        Action difference certifying distinct fixed points.

    Returns
    -------
    result : dict
        The smallest difference of slice actions as 'value', and as 'window_gap' the smallest
        distance between the action windows of consecutive modes, which is positive if the
        profiles never overlap. Passes trivially for fewer than two modes.
    """

    slices, windows = [], []
    for state in states:

        _, info = extract_candidate(state, orientation, return_slice=True)
        window = action_window(action_profile(system, state.grid, orientation), state.T)

        slices.append(info['action'])
        windows.append((window['action'].min(), window['action'].max()))

    order = np.argsort(slices)
    slices = np.array(slices)[order]
    windows = [windows[ind] for ind in order]

    value = np.min(np.diff(slices)) if len(slices) > 1 else np.inf
    window_gap = min((upper[0] - lower[1] for lower, upper in zip(windows[:-1], windows[1:])),
                     default=np.inf)

    return {'name': 'action_separation', 'passed': bool(value > separation and window_gap > 0),
            'value': float(value), 'threshold': float(separation),
            'window_gap': float(window_gap), 'modes': [int(state.n) for state in states]}


def check_strip_order(system, n, T_end, hofer, ratio_range=(3, 5), **continuation_kwargs):
    """Richardson ratio of strip energies when both grid counts are doubled twice.

    The continuation runs over [0, T_end / 2, T_end] on grids of (n_s, n_t), (2 n_s, 2 n_t)
    and (4 n_s, 4 n_t) nodes. Second order differences give a ratio near 4. Strips whose
    energies agree to the absolute floor on every grid pass without a ratio.
    """

    n_s = continuation_kwargs.pop('n_s', 64)
    n_t = continuation_kwargs.pop('n_t', 16)
    schedule = [0., T_end / 2, T_end] if T_end > 0 else [0.]

    energies = []
    for level in range(3):
        state = continue_in_T(system, n, schedule, n_s=n_s * 2 ** level, n_t=n_t * 2 ** level,
                              hofer=hofer, **continuation_kwargs)
        energies.append(energy(system, state.grid))

    diffs = np.diff(energies)

    if np.max(np.abs(diffs)) <= ABS_TOL:
        return _result('strip_order', 0., 0., ratio=None, energies=energies)

    ratio = diffs[0] / diffs[1] if diffs[1] != 0 else np.inf
    in_range = ratio_range[0] <= ratio <= ratio_range[1]

    return {'name': 'strip_order', 'passed': bool(in_range), 'value': float(ratio),
            'threshold': float(ratio_range[1]), 'range': list(ratio_range),
            'energies': energies}


def check_resume(system, path, config, hofer=0., threshold=1e-10):
    """Resuming from a snapshot repeats the uninterrupted run.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    path : str
        Snapshot written by a continuation with this configuration.
    config : RunConfig
        Run configuration.
    hofer : float, optional, default: 0.
        Hofer norm estimate of G passed to both continuations.
    threshold : float, optional, default: 1e-10
        Largest allowed difference between the runs.

    Returns
    -------
    result : dict
        Check named after the snapshot file.

    Notes
    -----
    An uninterrupted continuation runs from T = 0 through the configured schedule up to the
    snapshot T, and one step past it. The snapshot is continued over the same step. The
    value is the largest difference between the action profiles at the snapshot T, the log
    rows past it, and the final strips. Nothing is written to disk.
    """

    grid = load_snapshot(path)
    name = 'resume_' + os.path.basename(path)

    schedule = build_schedule(config)
    later = [T_val for T_val in schedule if T_val > grid.T]
    step = schedule[-1] - schedule[-2] if len(schedule) > 1 else 1.
    T_next = later[0] if later else grid.T + step

    schedule = [T_val for T_val in schedule if T_val < grid.T] + [grid.T, T_next]
    schedule = schedule if grid.T > 0 else [0., T_next]

    kwargs = continuation_kwargs(config)
    kwargs.update(n_s=grid.n_s, n_t=grid.n_t, hofer=hofer,
                  margin=grid.S - strip_half_width(T_next, 0.))

    reference = continue_in_T(system, grid.n, schedule, **kwargs)
    resumed = continue_in_T(system, grid.n, schedule,
                            state=ContinuationState(system, grid, schedule, hofer), **kwargs)

    if grid.T not in reference.profiles:
        return _result(name, np.inf, threshold,
                       error='The uninterrupted run does not pass through T={}.'.format(grid.T))

    tail = reference.log[reference.log['T'] > grid.T]
    if tail['T'].tolist() != resumed.accepted:
        return _result(name, np.inf, threshold,
                       error='The resumed run accepts T values {}, the uninterrupted run '
                             '{}.'.format(resumed.accepted, tail['T'].tolist()))

    orientation = config['strip.action_orientation']
    diffs = [np.abs(reference.profiles[grid.T]['action'].values -
                    action_profile(system, grid, orientation)['action'].values),
             np.abs(tail.values - resumed.log.values),
             np.abs(reference.grid.values - resumed.grid.values)]

    return _result(name, max(np.max(diff) for diff in diffs), threshold)
