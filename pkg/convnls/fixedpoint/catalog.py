"""Catalogs of fixed points, ordered and separated by action."""

import json

import numpy as np
import pandas as pd

from convnls.spectral.fields import basis_field
from convnls.spectral.norms import projective_distance
from convnls.fixedpoint.records import FLAG_NOT_CERTIFIED, FLAG_TRIVIAL

###################################################################################################
###################################################################################################

# Action windows narrower than this do not certify that two fixed points differ
SEPARATION = np.pi
TRIVIAL_TOL = 1e-6


def label_and_separate(records, psi=None, separation=SEPARATION, trivial_tol=TRIVIAL_TOL):
    """Sort fixed point records by action and flag uncertified or trivial ones.

    Parameters
    ----------
    records : list of FixedPointRecord
        Records, each carrying an action.
    psi : Kernel, optional
        Kernel of the system. If given, records within projective distance trivial_tol of
        u0_m with psi(m) = 0 are flagged as trivial-coincident.
    separation : float, optional, default: pi
        Smallest action difference certifying that two records are distinct.
    trivial_tol : float, optional, default: 1e-6
        Projective distance to a trivial fixed point below which a record coincides with it.

    Returns
    -------
    records : list of FixedPointRecord
        Records sorted by action, with flags set.
    df_catalog : pandas.DataFrame
        One row per record, in the same order.

    Examples
    --------
    Free fixed points of modes 1 and 2 differ in action by 1.5, which is below pi:

    >>> from convnls.spectral import basis_field
    >>> from convnls.fixedpoint.records import FixedPointRecord
    >>> records = [FixedPointRecord(basis_field(n, 2), 0., 1., n=n, action_slice=n ** 2 / 2)
    ...            for n in (1, 2)]
    >>> records, df_catalog = label_and_separate(records)
    >>> df_catalog['flags'].tolist()
    ['separation not certified', 'separation not certified']
    """

    for record in records:
        if record.action is None:
            raise ValueError('Every record must carry an action to be cataloged.')

    records = sorted(records, key=lambda record: record.action)
    actions = np.array([record.action for record in records])

    for idx, record in enumerate(records):

        others = np.delete(actions, idx)
        if np.any(np.abs(others - record.action) < separation):
            record.add_flag(FLAG_NOT_CERTIFIED)

        if psi is not None:
            k = record.u.k
            trivial = [mode for mode in range(-k, k + 1) if psi[mode] == 0]

            if any(projective_distance(record.u.coeffs, basis_field(mode, k)) <= trivial_tol
                   for mode in trivial):
                record.distinct_from_trivial = False
                record.add_flag(FLAG_TRIVIAL)

    df_catalog = pd.DataFrame([record.to_series() for record in records])

    return records, df_catalog


def catalog_to_json(records):
    """Encode records as a list of catalog entries."""

    return [record.to_dict() for record in records]


def save_catalog(records, path):
    """Write a catalog JSON file."""

    with open(path, 'w') as f_obj:
        json.dump(catalog_to_json(records), f_obj, indent=1)
