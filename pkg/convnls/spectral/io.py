"""JSON serialization of fields and kernels."""

import json

import numpy as np

from convnls.utils.errors import SnapshotError
from convnls.spectral.fields import FourierField, as_coeffs, get_k
from convnls.spectral.kernels import Kernel

###################################################################################################
###################################################################################################

SCHEMA_VERSION = 1


def field_to_json(field):
    """Encode a field as a JSON-ready dictionary.

    Parameters
    ----------
    field : FourierField or 1d array
        Field to encode.

    Returns
    -------
    data : dict
        Dictionary with keys 'version', 'k' and 'coeffs', the latter as [re, im] pairs
        ordered n = -k ... k.
    """

    coeffs = as_coeffs(field)

    return {'version': SCHEMA_VERSION, 'k': get_k(coeffs),
            'coeffs': [[float(coeff.real), float(coeff.imag)] for coeff in coeffs]}


def field_from_json(data):
    """Decode a field from a dictionary made by :func:`field_to_json`."""

    coeffs = _decode_coeffs(data)

    return FourierField(coeffs)


def kernel_to_json(psi):
    """Encode a kernel, including its gap threshold."""

    data = field_to_json(psi.coeffs)
    data['delta'] = psi.delta

    return data


def kernel_from_json(data):
    """Decode a kernel from a dictionary made by :func:`kernel_to_json`."""

    return Kernel(_decode_coeffs(data), data.get('delta'))


def save_field(field, path):
    """Write a field, or kernel, to a JSON file."""

    data = kernel_to_json(field) if isinstance(field, Kernel) else field_to_json(field)

    with open(path, 'w') as f_obj:
        json.dump(data, f_obj)


def load_field(path, kernel=False):
    """Read a field, or a kernel if requested, from a JSON file.

    Raises
    ------
    SnapshotError
        If the file cannot be read or decoded, naming the file.
    """

    try:
        with open(path, 'r') as f_obj:
            data = json.load(f_obj)
    except (OSError, json.JSONDecodeError) as err:
        raise SnapshotError('Field file cannot be read ({})'.format(err), path) from err

    try:
        return kernel_from_json(data) if kernel else field_from_json(data)
    except SnapshotError as err:
        raise SnapshotError(str(err), path) from err


def _decode_coeffs(data):

    if not isinstance(data, dict):
        raise SnapshotError('Field JSON must hold an object.')

    missing = [key for key in ('version', 'k', 'coeffs') if key not in data]
    if missing:
        raise SnapshotError('Field JSON is missing keys {}.'.format(missing))

    if data.get('version') != SCHEMA_VERSION:
        raise SnapshotError('Unsupported field schema version: {}.'.format(data.get('version')))

    pairs = np.asarray(data['coeffs'], dtype=float).reshape(-1, 2)
    coeffs = pairs[:, 0] + 1j * pairs[:, 1]

    if len(coeffs) != 2 * data['k'] + 1:
        raise SnapshotError('Field JSON holds {} coefficients, '
                            'expected 2k+1 = {}.'.format(len(coeffs), 2 * data['k'] + 1))

    return coeffs
