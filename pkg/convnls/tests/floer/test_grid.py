"""Tests for floer.grid."""

from pytest import raises

import numpy as np

from convnls.spectral.fields import basis_field, dispersion_phases
from convnls.floer.grid import *

###################################################################################################
###################################################################################################

def test_constant_strip():

    grid = constant_strip(1, 3, n_s=8, n_t=4, margin=2.)

    assert grid.values.shape == (8, 4, 7)
    assert grid.S == 2.
    assert grid.s[0] == -2. and grid.s[-1] == 2.
    assert np.isclose(grid.ds, 4 / 7)
    assert np.allclose(grid.t, [0., 0.25, 0.5, 0.75])

    assert np.allclose(grid.node_norms(), 1.)
    assert np.allclose(grid.comoving(), basis_field(1, 3))
    assert np.allclose(grid.values[:, 2], basis_field(1, 3) * np.exp(0.5j))


def test_strip_grid_twist():

    grid = constant_strip(2, 3, 1., n_s=6, n_t=4, margin=1.)

    assert grid.S == strip_half_width(1., 1.)
    assert np.allclose(grid.last_row(), grid.values[:, 0] * dispersion_phases(3, 1.))

    rebuilt = StripGrid.from_comoving(grid.comoving(), grid.S, grid.T, grid.n)
    assert np.allclose(rebuilt.values, grid.values)

    moved = grid.with_T(2.)
    assert moved.T == 2. and grid.T == 1.
    assert np.array_equal(moved.values, grid.values)
    assert moved.values is not grid.values

    assert np.allclose(grid.cutoff[np.abs(grid.s) <= 1.], 1.)


def test_strip_grid_errors():

    with raises(ValueError):
        StripGrid(np.zeros((4, 3)), 1., 0., 0)

    with raises(ValueError):
        StripGrid(np.zeros((3, 3, 3)), 1., 0., 0)

    with raises(ValueError):
        StripGrid(np.zeros((4, 3, 3)), 1., 0., 2)
