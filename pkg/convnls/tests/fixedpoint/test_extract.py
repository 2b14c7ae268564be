"""Tests for fixedpoint.extract."""

import numpy as np

from convnls.spectral.fields import basis_field
from convnls.spectral.norms import compute_norm
from convnls.fixedpoint.extract import *

###################################################################################################
###################################################################################################

def test_extract_candidate_free(state_free):

    candidate, info = extract_candidate(state_free, return_slice=True)

    assert np.array_equal(candidate, basis_field(1, 3))
    assert set(info) == {'s0', 'defect', 'action', 'T'}
    assert np.isclose(info['action'], 0.5)
    assert info['T'] == state_free.T


def test_extract_candidate(state_gp):

    candidate, info = extract_candidate(state_gp, return_slice=True)

    assert np.isclose(compute_norm(candidate), 1.)
    assert abs(info['s0']) <= state_gp.T
    assert np.array_equal(candidate, extract_candidate(state_gp))
