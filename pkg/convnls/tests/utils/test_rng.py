"""Tests for utils.rng."""

from pytest import raises

import numpy as np

from convnls.utils.rng import get_rng

###################################################################################################
###################################################################################################

def test_get_rng():

    draws_a = get_rng(0).standard_normal(5)
    draws_b = get_rng(0).standard_normal(5)
    assert np.array_equal(draws_a, draws_b)

    # Streams are independent of each other and of the draws made before
    rng = get_rng(0)
    rng.standard_normal(100)
    assert not np.array_equal(get_rng(0, stream=1).standard_normal(5), draws_a)
    assert np.array_equal(get_rng(0, stream=1).standard_normal(5),
                          get_rng(0, stream=1).standard_normal(5))

    assert not np.array_equal(get_rng(1).standard_normal(5), draws_a)

    with raises(ValueError):
        get_rng(0, stream=-1)
