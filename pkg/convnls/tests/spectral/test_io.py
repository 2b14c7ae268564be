"""Tests for spectral.io."""

import os

from pytest import raises

import numpy as np

from convnls.utils.errors import SnapshotError
from convnls.spectral.fields import FourierField, random_fields
from convnls.spectral.kernels import make_admissible_kernel
from convnls.spectral.io import *
from convnls.tests.settings import BASE_TEST_FILE_PATH

###################################################################################################
###################################################################################################

def test_field_json(rng):

    coeffs = random_fields(rng, 3)
    data = field_to_json(coeffs)

    assert data['version'] == 1
    assert data['k'] == 3
    assert len(data['coeffs']) == 7

    field = field_from_json(data)
    assert isinstance(field, FourierField)
    assert np.allclose(field.coeffs, coeffs, rtol=1e-15)


def test_field_json_errors():

    data = {'version': 2, 'k': 1, 'coeffs': [[0, 0]] * 3}
    with raises(ValueError):
        field_from_json(data)

    data = {'version': 1, 'k': 2, 'coeffs': [[0, 0]] * 3}
    with raises(ValueError):
        field_from_json(data)


def test_kernel_json():

    psi = make_admissible_kernel(0.5, 3)
    psi_loaded = kernel_from_json(kernel_to_json(psi))

    assert psi_loaded.delta == psi.delta
    assert np.allclose(psi_loaded.coeffs, psi.coeffs)


def test_save_load(rng):

    path = os.path.join(BASE_TEST_FILE_PATH, 'test_field.json')
    coeffs = random_fields(rng, 2)

    save_field(coeffs, path)
    assert np.allclose(load_field(path).coeffs, coeffs)

    psi = make_admissible_kernel(0.5, 2)
    save_field(psi, path)
    assert np.allclose(load_field(path, kernel=True).coeffs, psi.coeffs)


def test_load_field_errors():

    path = os.path.join(BASE_TEST_FILE_PATH, 'test_bad_field.json')

    with open(path, 'w') as f_obj:
        f_obj.write('{"version": 1, "k": 1')
    with raises(SnapshotError) as excinfo:
        load_field(path)
    assert excinfo.value.path == path

    with open(path, 'w') as f_obj:
        f_obj.write('{"version": 3, "k": 0, "coeffs": [[1, 0]]}')
    with raises(SnapshotError) as excinfo:
        load_field(path)
    assert excinfo.value.path == path

    with raises(SnapshotError):
        field_from_json({'version': 1, 'k': 0})

    with raises(SnapshotError):
        load_field(os.path.join(BASE_TEST_FILE_PATH, 'missing_field.json'))
