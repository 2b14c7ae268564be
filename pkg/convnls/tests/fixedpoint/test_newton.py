"""Tests for fixedpoint.newton."""

from pytest import raises

import numpy as np

from convnls.utils.errors import NewtonError
from convnls.spectral.fields import basis_field, random_fields
from convnls.spectral.norms import (inner_real, compute_norm, normalize, projective_distance,
                                    align_phase)
from convnls.flow.integrate import FlowSpec, time_one_map
from convnls.fixedpoint.newton import *

###################################################################################################
###################################################################################################

def _perturbed_start(k):
    """A unit field near u0_0, which is fixed as psi(0) = 0."""

    return normalize(basis_field(0, k) + 0.01 * basis_field(1, k))


def test_horizontal_basis(rng):

    field = random_fields(rng, 2)
    basis = horizontal_basis(field)

    assert basis.shape == (8, 5)
    assert np.allclose(inner_real(basis, field), 0.)
    assert np.allclose(inner_real(basis, 1j * field), 0.)

    # Orthonormal in the Euclidean inner product of the real coefficients
    gram = np.real(basis @ np.conj(basis).T)
    assert np.allclose(gram, np.eye(8))


def test_refine_newton_free(system_free):

    spec = FlowSpec(system_free)

    for mode in range(-system_free.k, system_free.k + 1):

        record = refine_newton(spec, basis_field(mode, system_free.k), n=mode,
                               action_slice=mode ** 2 / 2)

        assert record.iterations == 0
        assert record.residual < 1e-14
        assert np.isclose(record.multiplier, np.exp(1j * mode ** 2))
        assert record.action == mode ** 2 / 2
        assert record.displacement < 1e-6


def test_refine_newton(flow_spec_gp):

    k = flow_spec_gp.system.k
    start = _perturbed_start(k)

    record = refine_newton(flow_spec_gp, start, tol=1e-9, n=0, action_slice=0.)

    assert record.residual <= 1e-9
    assert record.iterations > 0
    assert np.isclose(abs(record.multiplier), 1.)
    assert np.isclose(compute_norm(record.u.coeffs), 1.)
    assert np.isclose(record.displacement, projective_distance(start, record.u.coeffs))

    mapped = time_one_map(flow_spec_gp, record.u.coeffs)
    assert compute_norm(mapped - record.multiplier * record.u.coeffs) <= 1e-9

    assert projective_distance(record.u.coeffs, basis_field(0, k)) < 1e-3


def test_refine_newton_errors(flow_spec_gp):

    k = flow_spec_gp.system.k

    with raises(ValueError):
        refine_newton(flow_spec_gp, 2 * basis_field(0, k))

    with raises(NewtonError) as excinfo:
        refine_newton(flow_spec_gp, _perturbed_start(k), max_iter=0)

    assert excinfo.value.iterate is not None
    assert excinfo.value.residual > 1e-9


def test_refine_newton_gauge(flow_spec_gp):

    start = _perturbed_start(flow_spec_gp.system.k)

    record = refine_newton(flow_spec_gp, start)
    rotated = refine_newton(flow_spec_gp, np.exp(1.3j) * start)

    aligned = align_phase(rotated.u.coeffs, record.u.coeffs)
    assert np.max(np.abs(aligned - record.u.coeffs)) <= 1e-10
    assert np.isclose(record.multiplier, rotated.multiplier, atol=1e-9)


def test_refine_newton_idempotent(flow_spec_gp):

    record = refine_newton(flow_spec_gp, _perturbed_start(flow_spec_gp.system.k))
    again = refine_newton(flow_spec_gp, record.u.coeffs)

    assert again.iterations == 0
    assert np.max(np.abs(again.u.coeffs - record.u.coeffs)) <= 1e-12
