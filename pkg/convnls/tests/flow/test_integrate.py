"""Tests for flow.integrate."""

from pytest import raises

import numpy as np

from convnls.utils.errors import IntegratorStepError
from convnls.spectral.fields import random_fields
from convnls.spectral.norms import compute_norm
from convnls.flow.free import free_fixed_points
from convnls.flow.integrate import *

###################################################################################################
###################################################################################################

def test_flow_spec(system_gp):

    spec = FlowSpec(system_gp, dt=0.25)

    assert spec.n_steps == 4
    assert np.allclose(spec.times, [0., 0.25, 0.5, 0.75, 1.])

    backward = spec.with_interval(1., 0.)
    assert backward.n_steps == 4
    assert backward.times[-1] == 0.

    with raises(ValueError):
        FlowSpec(system_gp, dt=0.)

    with raises(ValueError):
        FlowSpec(system_gp, dt=0.3)


def test_flow_G(flow_spec_gp, unit_fields):

    final, drift = flow_G(flow_spec_gp, unit_fields, return_drift=True)

    assert final.shape == unit_fields.shape
    assert np.allclose(compute_norm(final), 1., atol=1e-8)
    assert drift <= flow_spec_gp.drift_tol

    # Backward integration returns to the start
    back = flow_G(flow_spec_gp.with_interval(1., 0.), final)
    assert np.allclose(back, unit_fields, atol=1e-6)


def test_flow_G_free(system_free, rng):

    fields = random_fields(rng, system_free.k, 3)

    assert np.array_equal(flow_G(FlowSpec(system_free), fields), fields)


def test_flow_G_step_error(system_gp, unit_fields):

    with raises(IntegratorStepError):
        flow_G(FlowSpec(system_gp, dt=0.5, drift_tol=1e-15), unit_fields)


def test_time_one_map_free(system_free):

    fields, multipliers, _ = free_fixed_points(system_free.k)
    mapped = time_one_map(FlowSpec(system_free), fields)

    assert np.allclose(mapped, multipliers[:, None] * fields, atol=1e-15)


def test_tangent_time_one(flow_spec_gp, unit_fields, rng):

    field = unit_fields[0]
    directions = random_fields(rng, flow_spec_gp.system.k, 2)
    step = 1e-5

    tangents, mapped = tangent_time_one(flow_spec_gp, field, directions, return_map=True)

    diffs = np.array([(time_one_map(flow_spec_gp, field + step * direction) -
                       time_one_map(flow_spec_gp, field - step * direction)) / (2 * step)
                      for direction in directions])

    assert tangents.shape == directions.shape
    assert np.allclose(tangents, diffs, atol=1e-7)
    assert np.allclose(mapped, time_one_map(flow_spec_gp, field))

    single = tangent_time_one(flow_spec_gp, field, directions[0])
    assert single.shape == directions[0].shape


def test_simulate(flow_spec_gp, unit_fields):

    df_obs, final = simulate(flow_spec_gp, unit_fields[0], record_every=50)

    assert list(df_obs.columns) == ['t', 'norm', 'F', 'G', 'H0']
    assert len(df_obs) == 5
    assert df_obs['t'].iloc[-1] == 1.
    assert np.allclose(df_obs['norm'], 1., atol=1e-8)
    assert np.allclose(final, flow_G(flow_spec_gp, unit_fields[0]))
