"""Fixed-step integration of the interaction-picture flow and its linearization."""

import logging

import numpy as np
import pandas as pd

from convnls.utils.errors import IntegratorStepError
from convnls.spectral.fields import as_coeffs
from convnls.spectral.norms import compute_norm
from convnls.hamiltonian.system import X_G, eval_F, eval_G, eval_H0
from convnls.flow.free import free_flow

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)

TANGENT_STEP = 1e-6


class FlowSpec:
    """Settings of a fixed-step RK4 integration of du/dt = X^G_t(u).

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system generating the flow.
    dt : float, optional, default: 1e-3
        Step size.
    t0, t1 : float, optional, default: 0., 1.
        Time interval. Backward integration, t1 < t0, is allowed.
    drift_tol : float, optional, default: 1e-6
        Largest norm drift along a trajectory before the step is deemed too large.

    Raises
    ------
    ValueError
        If dt is not positive, or the interval is not an integer number of steps.
    """

    def __init__(self, system, dt=1e-3, t0=0., t1=1., drift_tol=1e-6):

        if dt <= 0:
            raise ValueError('The step size dt must be positive.')

        n_steps = abs(t1 - t0) / dt
        if abs(n_steps - round(n_steps)) > 4 * np.finfo(float).eps * max(1., n_steps):
            raise ValueError('The interval [{}, {}] is not an integer number of '
                             'steps dt={}.'.format(t0, t1, dt))

        self.system = system
        self.dt = float(dt)
        self.t0 = float(t0)
        self.t1 = float(t1)
        self.drift_tol = float(drift_tol)


    def __repr__(self):

        return 'FlowSpec(dt={}, t0={}, t1={})'.format(self.dt, self.t0, self.t1)


    @property
    def n_steps(self):

        return int(round(abs(self.t1 - self.t0) / self.dt))


    @property
    def times(self):
        """Times of the integration steps, including both ends."""

        return self.t0 + (self.t1 - self.t0) * np.arange(self.n_steps + 1) / max(self.n_steps, 1)


    def with_interval(self, t0, t1):
        """Return the same settings on another interval."""

        return FlowSpec(self.system, self.dt, t0, t1, self.drift_tol)


def _rk4_step(func, state, time, step):

    k1 = func(state, time)
    k2 = func(state + 0.5 * step * k1, time + 0.5 * step)
    k3 = func(state + 0.5 * step * k2, time + 0.5 * step)
    k4 = func(state + step * k3, time + step)

    return state + step / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def _check_drift(spec, state, norms0, time):

    drift = float(np.max(np.abs(compute_norm(state) - norms0)))

    if drift > spec.drift_tol:
        raise IntegratorStepError('Integrator step too large: norm drift {:.3g} at t={:.6g} '
                                  'exceeds {:.3g}.'.format(drift, time, spec.drift_tol),
                                  drift=drift, state=state)

    return drift


def flow_G(spec, field, return_drift=False):
    """Integrate du/dt = X^G_t(u) from spec.t0 to spec.t1 with fixed-step RK4.

    Parameters
    ----------
    spec : FlowSpec
        Integration settings.
    field : ndarray or FourierField
        Initial field(s), with leading axes batched.
    return_drift : bool, optional, default: False
        Whether to also return the largest norm drift along the trajectory.

    Returns
    -------
    final : ndarray
        Final field(s).
    drift : float
        Largest norm drift, only returned if requested.

    Raises
    ------
    IntegratorStepError
        If the norm drift exceeds spec.drift_tol.
    """

    state = np.array(as_coeffs(field), dtype=complex)
    norms0 = compute_norm(state)
    vector_field = lambda vals, time: X_G(spec.system, vals, time)

    times = spec.times
    step = (spec.t1 - spec.t0) / max(spec.n_steps, 1)

    drift = 0.
    if not spec.system.is_free:
        for time in times[:-1]:
            state = _rk4_step(vector_field, state, time, step)
            drift = max(drift, _check_drift(spec, state, norms0, time + step))

    logger.debug('Integrated %d steps, largest norm drift %.3g', spec.n_steps, drift)

    return (state, drift) if return_drift else state


def time_one_map(spec, field):
    """Time-one map of the full flow, phi_1 = phi^G_1 composed with phi0_1.

    Parameters
    ----------
    spec : FlowSpec
        Integration settings. The interval is replaced by [0, 1].
    field : ndarray or FourierField
        Initial field(s).

    Returns
    -------
    mapped : ndarray
        Coefficients of phi_1(u).
    """

    return flow_G(spec.with_interval(0., 1.), free_flow(field, 1.))


def tangent_time_one(spec, field, directions, return_map=False):
    """Linearization of the time-one map, D phi_1(u)[v], for a batch of directions.

    Parameters
    ----------
    spec : FlowSpec
        Integration settings. The interval is replaced by [0, 1].
    field : 1d array or FourierField
        Base point u.
    directions : ndarray
        Direction(s) v, of shape (2k+1,) or (n_directions, 2k+1).
    return_map : bool, optional, default: False
        Whether to also return phi_1(u), which is integrated alongside.

    Returns
    -------
    tangents : ndarray
        D phi_1(u)[v], of the same shape as directions.
    mapped : 1d array
        phi_1(u), only returned if requested.

    Notes
    -----
    The variational equation dv/dt = DX^G_t(u)[v] is integrated jointly with the base
    trajectory by the same RK4 stages, with DX^G from central differences of X^G.
    """

    spec = spec.with_interval(0., 1.)
    system = spec.system

    base = free_flow(field, 1.)
    tangents = free_flow(directions, 1.)
    n_dirs = 1 if tangents.ndim == 1 else len(tangents)

    state = np.vstack([base[None, :], np.reshape(tangents, (n_dirs, -1))])
    norms0 = compute_norm(state[0])

    def joint_field(vals, time):

        out = np.empty_like(vals)
        out[0] = X_G(system, vals[0], time)

        norms = compute_norm(vals[1:])
        scale = np.where(norms > 0, TANGENT_STEP / np.where(norms > 0, norms, 1.), 0.)[:, None]

        forward = X_G(system, vals[0] + scale * vals[1:], time)
        backward = X_G(system, vals[0] - scale * vals[1:], time)
        out[1:] = np.where(scale > 0, (forward - backward) / np.where(scale > 0, 2 * scale, 1.),
                           0.)

        return out

    step = 1. / spec.n_steps
    if not system.is_free:
        for time in spec.times[:-1]:
            state = _rk4_step(joint_field, state, time, step)
            _check_drift(spec, state[0], norms0, time + step)

    tangents_out = np.reshape(state[1:], np.shape(tangents))

    return (tangents_out, state[0]) if return_map else tangents_out


def simulate(spec, field, record_every=1):
    """Integrate the interaction-picture flow, recording observables along the trajectory.

    Parameters
    ----------
    spec : FlowSpec
        Integration settings.
    field : 1d array or FourierField
        Initial field.
    record_every : int, optional, default: 1
        Record observables every this many steps. The final time is always recorded.

    Returns
    -------
    df_obs : pandas.DataFrame
        Columns 't', 'norm', 'F', 'G' and 'H0', each evaluated on the interaction-picture
        state v at time t.
    final : 1d array
        Final interaction-picture state.
    """

    system = spec.system
    state = np.array(as_coeffs(field), dtype=complex)
    norm0 = compute_norm(state)

    vector_field = lambda vals, time: X_G(system, vals, time)
    step = (spec.t1 - spec.t0) / max(spec.n_steps, 1)
    times = spec.times

    rows = []
    for idx, time in enumerate(times):

        if idx % record_every == 0 or idx == len(times) - 1:
            rows.append({'t': time, 'norm': compute_norm(state),
                         'F': eval_F(system, state, time), 'G': eval_G(system, state, time),
                         'H0': eval_H0(state)})

        if idx < len(times) - 1 and not system.is_free:
            state = _rk4_step(vector_field, state, time, step)
            _check_drift(spec, state, norm0, time + step)

    return pd.DataFrame(rows, columns=['t', 'norm', 'F', 'G', 'H0']), state
