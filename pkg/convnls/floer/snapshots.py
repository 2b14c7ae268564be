"""Save and load strips as JSON snapshots."""

import json

import numpy as np

from convnls.utils.errors import SnapshotError
from convnls.floer.grid import StripGrid

###################################################################################################
###################################################################################################

SNAPSHOT_VERSION = 1
SNAPSHOT_KEYS = ['version', 'T', 'S', 'Ns', 'Nt', 'n', 'k', 'rows']


def snapshot_to_json(grid):
    """Encode a strip as a JSON-ready dictionary.

    Parameters
    ----------
    grid : StripGrid
        Strip to encode.

    Returns
    -------
    data : dict
        Dictionary with keys 'version', 'T', 'S', 'Ns', 'Nt', 'n', 'k' and 'rows'. The rows
        hold, for each node in s-major order, the coefficients as [re, im] pairs.
    """

    values = grid.values.reshape(grid.n_s * grid.n_t, -1)

    return {'version': SNAPSHOT_VERSION, 'T': grid.T, 'S': grid.S, 'Ns': grid.n_s,
            'Nt': grid.n_t, 'n': grid.n, 'k': grid.k,
            'rows': [[[float(val.real), float(val.imag)] for val in node] for node in values]}


def snapshot_from_json(data, path=None):
    """Decode a strip from a dictionary made by :func:`snapshot_to_json`.

    Raises
    ------
    SnapshotError
        If keys are missing, the version is unknown or the shapes are inconsistent.
    """

    missing = [key for key in SNAPSHOT_KEYS if key not in data]
    if missing:
        raise SnapshotError('Snapshot is missing keys {}'.format(missing), path)

    if data['version'] != SNAPSHOT_VERSION:
        raise SnapshotError('Unsupported snapshot version {}'.format(data['version']), path)

    try:
        rows = np.asarray(data['rows'], dtype=float)
        values = (rows[..., 0] + 1j * rows[..., 1]).reshape(
            data['Ns'], data['Nt'], 2 * data['k'] + 1)
        grid = StripGrid(values, data['S'], data['T'], data['n'])
    except (ValueError, IndexError, TypeError) as err:
        raise SnapshotError('Snapshot values are inconsistent ({})'.format(err), path) from err

    return grid


def save_snapshot(grid, path):
    """Write a strip to a JSON snapshot file."""

    with open(path, 'w') as f_obj:
        json.dump(snapshot_to_json(grid), f_obj)


def load_snapshot(path):
    """Read a strip from a JSON snapshot file.

    Parameters
    ----------
    path : str
        Path of the snapshot.

    Returns
    -------
    grid : StripGrid
        Stored strip.

    Raises
    ------
    SnapshotError
        If the file cannot be read or parsed, naming the snapshot.
    """

    try:
        with open(path, 'r') as f_obj:
            data = json.load(f_obj)
    except (OSError, json.JSONDecodeError) as err:
        raise SnapshotError('Snapshot cannot be read ({})'.format(err), path) from err

    if not isinstance(data, dict):
        raise SnapshotError('Snapshot must hold a JSON object', path)

    return snapshot_from_json(data, path)
