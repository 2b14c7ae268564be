"""Tests for hamiltonian.system."""

from pytest import raises

import numpy as np

from convnls.spectral.fields import basis_field, random_fields
from convnls.spectral.norms import compute_norm, inner_real
from convnls.hamiltonian.density import ZeroDensity
from convnls.hamiltonian.system import *

###################################################################################################
###################################################################################################

def test_hamiltonian_system(psi_small, system_free, system_gp):

    assert system_free.is_free
    assert not system_gp.is_free

    assert len(system_gp.multiplier) == 2 * system_gp.k + 1
    assert len(system_gp.x) == system_gp.n_grid

    system_low = system_gp.with_kernel_modes(2)
    assert system_low.kernel_modes == 2
    assert np.all(system_low.multiplier[np.abs(system_low.modes) > 2] == 0)

    with raises(TypeError):
        HamiltonianSystem(psi_small.coeffs, ZeroDensity(), 3)

    with raises(ValueError):
        HamiltonianSystem(psi_small, ZeroDensity(), -1)

    with raises(ValueError):
        eval_F(system_gp, basis_field(1, 2), 0.)


def test_gradients(system_gp, unit_fields, rng):

    directions = random_fields(rng, system_gp.k, len(unit_fields))
    times = rng.uniform(0, 1, len(unit_fields))
    step = 1e-5

    for evaluate, gradient in ((eval_F, grad_F), (eval_G, grad_G)):

        diffs = (evaluate(system_gp, unit_fields + step * directions, times) -
                 evaluate(system_gp, unit_fields - step * directions, times)) / (2 * step)
        grads = gradient(system_gp, unit_fields, times)

        errors = np.abs(diffs - inner_real(grads, directions))
        assert np.all(errors <= 1e-6 * compute_norm(grads) * compute_norm(directions))


def test_perpendicularity(system_gp, unit_fields):

    for time in [0., 0.4]:
        overlap = inner_real(unit_fields, X_G(system_gp, unit_fields, time))
        assert np.allclose(overlap, 0, atol=1e-12)


def test_phase_equivariance(system_gp, unit_fields):

    phase = np.exp(0.7j)

    assert np.allclose(eval_F(system_gp, phase * unit_fields, 0.2),
                       eval_F(system_gp, unit_fields, 0.2))
    assert np.allclose(grad_F(system_gp, phase * unit_fields, 0.2),
                       phase * grad_F(system_gp, unit_fields, 0.2))


def test_interaction_picture(system_gp, unit_fields):

    assert np.allclose(eval_G(system_gp, unit_fields, 0.), eval_F(system_gp, unit_fields, 0.))
    assert np.allclose(grad_G(system_gp, unit_fields, 0.), grad_F(system_gp, unit_fields, 0.))

    # G_t(phi0_t u) = F_t(u)
    phases = np.exp(1j * 0.3 * system_gp.modes ** 2)
    assert np.allclose(eval_G(system_gp, phases * unit_fields, 0.3),
                       eval_F(system_gp, unit_fields, 0.3))


def test_hess_F(system_pair, system_gp, unit_fields, rng):

    # For a linear density the gradient is linear, so the Hessian is the gradient map
    fields = random_fields(rng, 1, 3)
    directions = random_fields(rng, 1, 3)
    assert np.allclose(hess_F(system_pair, fields, directions, 0.),
                       grad_F(system_pair, directions, 0.), rtol=1e-6, atol=1e-10)

    # Symmetry and homogeneity in the direction
    dir_a, dir_b = random_fields(rng, system_gp.k, 2)
    field = unit_fields[0]

    lhs = inner_real(hess_F(system_gp, field, dir_a, 0.1), dir_b)
    rhs = inner_real(dir_a, hess_F(system_gp, field, dir_b, 0.1))
    assert np.isclose(lhs, rhs, rtol=1e-5, atol=1e-9)

    assert np.allclose(hess_F(system_gp, field, 2 * dir_a, 0.1),
                       2 * hess_F(system_gp, field, dir_a, 0.1))

    assert np.all(hess_F(system_gp, field, np.zeros_like(field), 0.1) == 0)


def test_free_hamiltonian(system_free):

    for mode in range(-3, 4):
        assert np.isclose(eval_H0(basis_field(mode, 3)), mode ** 2 / 2)

    field = basis_field(2, 3)
    assert np.allclose(grad_H0(field), 4 * field)

    assert np.all(grad_F(system_free, field, 0.) == 0)
