"""Tests for hamiltonian.density."""

import os

from pytest import raises, mark

import numpy as np

from convnls.hamiltonian.density import *
from convnls.tests.settings import BASE_TEST_FILE_PATH

###################################################################################################
###################################################################################################

X_VALS = np.linspace(0, 2 * np.pi, 8, endpoint=False)


def test_zero_density():

    density = ZeroDensity()
    r_vals = np.ones((3, 8))

    assert density.is_zero
    assert np.all(density.f(r_vals, X_VALS, np.zeros((3, 1))) == 0)
    assert density.d1f(r_vals, X_VALS, 0.).shape == (3, 8)


def test_linear_density():

    density = LinearDensity(2.)
    r_vals = np.linspace(0, 1, 8)

    assert np.allclose(density.f(r_vals, X_VALS, 0.), 2 * r_vals)
    assert np.allclose(density.d1f(r_vals, X_VALS, 0.), 2.)

    assert LinearDensity(0.).is_zero
    assert not density.is_zero


def test_gp_density():

    density = GrossPitaevskiiDensity(0.1, 0.05)
    r_vals, step = np.linspace(0.1, 2, 8), 1e-6

    for time in [0., 0.3]:
        diff = (density.f(r_vals + step, X_VALS, time) -
                density.f(r_vals - step, X_VALS, time)) / (2 * step)
        assert np.allclose(diff, density.d1f(r_vals, X_VALS, time), atol=1e-8)

    # The potential is 1-periodic in t
    assert np.allclose(density.potential_values(X_VALS, 0.25),
                       density.potential_values(X_VALS, 1.25))

    assert GrossPitaevskiiDensity(0., 0.).is_zero
    assert not density.is_zero


def _quadratic_table():

    r_vals = np.linspace(0, 2, 6)
    x_vals = np.linspace(0, 2 * np.pi, 5)
    t_vals = np.linspace(0, 1, 5)

    values = np.broadcast_to((r_vals ** 2)[:, None, None], (6, 5, 5)).copy()

    return r_vals, x_vals, t_vals, values


def test_table_density():

    density = TableDensity(*_quadratic_table())
    r_vals = np.array([0.3, 1.3, 1.9])

    assert np.allclose(density.f(r_vals, 1., 0.4), r_vals ** 2, atol=1e-8)
    assert np.allclose(density.d1f(r_vals, 1., 0.4), 2 * r_vals, atol=1e-6)

    # Periodic wrap in x and t
    assert np.allclose(density.f(r_vals, 1. + 2 * np.pi, 1.4), density.f(r_vals, 1., 0.4))


def test_table_density_errors():

    r_vals, x_vals, t_vals, values = _quadratic_table()

    with raises(ValueError):
        TableDensity(r_vals, x_vals, t_vals, values[:, :, :-1])

    with raises(ValueError):
        TableDensity(r_vals, x_vals / 2, t_vals, values)


@mark.parametrize("kind", ['gp', 'linear', 'zero'])
def test_create_density(kind):

    density = create_density(kind, coupling=0.1, lam=1.)
    assert density.kind == kind


def test_create_density_table():

    r_vals, x_vals, t_vals, values = _quadratic_table()
    path = os.path.join(BASE_TEST_FILE_PATH, 'test_table.npz')
    np.savez(path, r=r_vals, x=x_vals, t=t_vals, f=values)

    density = create_density('custom-table', table=path)
    assert density.kind == 'custom-table'

    with raises(ValueError):
        create_density('cubic')
