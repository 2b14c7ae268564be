"""Tests for floer.cutoff."""

from pytest import raises

import numpy as np

from convnls.floer.cutoff import *

###################################################################################################
###################################################################################################

def test_smooth_step():

    x_vals = np.linspace(-1, 2, 301)
    steps = smooth_step(x_vals)

    assert np.all(steps[x_vals <= 0] == 0)
    assert np.all(steps[x_vals >= 1] == 1)
    assert np.all(np.diff(steps) >= 0)
    assert np.isclose(smooth_step(0.5), 0.5)


def test_cutoff_family():

    phi = CutoffFamily(2.)
    assert phi.T_hat == 3.
    assert phi([0., 2., 3.]).tolist() == [1.0, 1.0, 0.0]

    s_vals = np.linspace(-4, 4, 81)
    values = phi(s_vals)
    assert np.allclose(values, values[::-1])
    assert np.all((values >= 0) & (values <= 1))

    assert CutoffFamily(0.5).T_hat == 1.
    assert np.all(CutoffFamily(0.)(s_vals) == 0)
    assert np.array_equal(cutoff(2., s_vals), values)

    with raises(ValueError):
        CutoffFamily(-1.)


def test_cutoff_one_sided():

    assert cutoff_one_sided(-1.) == 0.
    assert cutoff_one_sided(0.) == 1.


def test_shift_profile():

    s_vals = np.linspace(-5, 0, 51)

    for T_val in [1., 2.5]:
        assert np.allclose(shift_profile(T_val, s_vals), cutoff(T_val, s_vals))

    with raises(ValueError):
        shift_profile(0.5, s_vals)
