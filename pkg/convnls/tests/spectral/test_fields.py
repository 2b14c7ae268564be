"""Tests for spectral.fields."""

from pytest import raises, mark

import numpy as np

from convnls.spectral.fields import *

###################################################################################################
###################################################################################################

@mark.parametrize("k, expected", [(0, 8), (1, 8), (2, 16), (3, 16), (4, 32), (8, 64)])
def test_grid_size(k, expected):

    assert grid_size(k) == expected


def test_get_k():

    assert get_k(np.zeros(7)) == 3
    assert get_k(np.zeros((5, 2, 9))) == 4

    with raises(ValueError):
        get_k(np.zeros(4))


def test_to_grid_basis():

    samples = to_grid(basis_field(2, 3))

    x_vals = grid_points(grid_size(3))
    assert np.allclose(samples, np.exp(2j * x_vals) / np.sqrt(2 * np.pi), atol=1e-14)


def test_to_spectrum_inverts_to_grid(rng):

    coeffs = random_fields(rng, 5, 3)

    assert np.allclose(to_spectrum(to_grid(coeffs), 5), coeffs, atol=1e-14)

    with raises(ValueError):
        to_spectrum(np.zeros(4), 3)


def test_resize_coeffs():

    coeffs = np.arange(1, 6, dtype=complex)

    padded = resize_coeffs(coeffs, 4)
    assert padded.tolist() == [0, 0, 1, 2, 3, 4, 5, 0, 0]

    truncated = resize_coeffs(coeffs, 1)
    assert truncated.tolist() == [2, 3, 4]


def test_dispersion_phases():

    phases = dispersion_phases(3, 1.)
    assert np.isclose(phases[6], np.exp(9j))

    # One row of phases per time
    assert dispersion_phases(2, np.array([0., 0.5])).shape == (2, 5)
    assert np.all(dispersion_phases(2, 0.) == 1)


def test_basis_field():

    field = basis_field(-1, 2)

    assert np.isclose(2 * np.pi * np.sum(np.abs(field) ** 2), 1.)
    assert np.flatnonzero(field).tolist() == [1]

    with raises(ValueError):
        basis_field(3, 2)


def test_random_fields(rng):

    fields = random_fields(rng, 3, 10)

    assert fields.shape == (10, 7)
    assert np.allclose(2 * np.pi * np.sum(np.abs(fields) ** 2, axis=-1), 1.)

    assert random_fields(rng, 3).shape == (7,)


def test_fourier_field():

    field = FourierField(2 * basis_field(1, 2))

    assert field.k == 2
    assert len(field) == 5
    assert field.modes.tolist() == [-2, -1, 0, 1, 2]
    assert np.isclose(field.norm(), 2.)
    assert np.isclose(field.normalize().norm(), 1.)

    # Frequencies outside the cut-off read as zero
    assert field[1] == 2 / np.sqrt(2 * np.pi)
    assert field[5] == 0

    with raises(ValueError):
        field.coeffs[0] = 1.

    with raises(ValueError):
        FourierField(np.zeros(5)).normalize()

    with raises(ValueError):
        FourierField(np.zeros((2, 5)))

    assert field.resize(4).k == 4
    assert np.allclose(FourierField.basis(1, 2).coeffs, basis_field(1, 2))


def test_grid_field():

    field = FourierField.basis(1, 3)
    grid = field.to_grid()

    assert grid.n_grid == grid_size(3)
    assert len(grid.x) == grid.n_grid
    assert np.isclose(grid.norm(), 1.)
    assert np.allclose(grid.to_spectrum(3).coeffs, field.coeffs, atol=1e-14)
