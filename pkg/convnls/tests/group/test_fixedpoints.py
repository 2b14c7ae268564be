"""Tests for group.fixedpoints."""

import numpy as np

from convnls.spectral import make_admissible_kernel
from convnls.spectral.fields import basis_field
from convnls.spectral.norms import projective_distance
from convnls.hamiltonian import HamiltonianSystem, ZeroDensity
from convnls.flow.integrate import FlowSpec
from convnls.fixedpoint.records import FLAG_NOT_CERTIFIED, FLAG_TRIVIAL
from convnls.group.fixedpoints import *
from convnls.tests.settings import N_S, N_T, MARGIN, SCHEDULE

###################################################################################################
###################################################################################################

CONTINUATION_KWARGS = {'n_s': N_S, 'n_t': N_T, 'margin': MARGIN, 'hofer': 0.}


def test_compute_fixed_points_free(system_free):

    records, df_catalog, states = compute_fixed_points(
        FlowSpec(system_free), [3, 1], SCHEDULE, CONTINUATION_KWARGS, n_jobs=1)

    assert [record.n for record in records] == [1, 3]
    assert [state.n for state in states] == [3, 1]
    assert np.allclose(df_catalog['action'], [0.5, 4.5])
    assert np.allclose(df_catalog['multiplier_re'], np.cos([1., 9.]))

    # Actions 0.5 and 4.5 are more than pi apart and psi(1), psi(3) are nonzero
    assert all(record.flags == [] for record in records)


def test_compute_fixed_points_parallel(system_free):

    kwargs = {'n_s': N_S, 'n_t': N_T, 'margin': MARGIN,
              'hofer_kwargs': {'n_nodes': 2, 'n_starts': 1}}

    serial = compute_fixed_points(FlowSpec(system_free), [1, 2], SCHEDULE, kwargs, n_jobs=1)
    parallel = compute_fixed_points(FlowSpec(system_free), [1, 2], SCHEDULE, kwargs, n_jobs=2)

    assert serial[1]['action'].tolist() == parallel[1]['action'].tolist()
    assert all(FLAG_NOT_CERTIFIED in record.flags for record in serial[0])


def test_compute_fixed_points_trivial(flow_spec_gp):

    records, df_catalog, _ = compute_fixed_points(
        flow_spec_gp, [0], SCHEDULE, CONTINUATION_KWARGS, n_jobs=1)

    assert len(records) == 1
    assert FLAG_TRIVIAL in records[0].flags
    assert not df_catalog['distinct_from_trivial'].iloc[0]
    assert records[0].residual <= 1e-9


def test_compute_fixed_points_free_complete(system_free):

    k = system_free.k
    modes = list(range(-k, k + 1))

    records, _, _ = compute_fixed_points(
        FlowSpec(system_free), modes, SCHEDULE, CONTINUATION_KWARGS, n_jobs=1)

    assert len(records) == 2 * k + 1
    assert sorted(record.n for record in records) == modes

    # Every free fixed point is a basis field, and each is found exactly once
    for mode in modes:
        dists = [projective_distance(record.u.coeffs, basis_field(mode, k))
                 for record in records]
        assert sum(dist <= 1e-6 for dist in dists) == 1


def test_compute_fixed_points_separated():

    system = HamiltonianSystem(make_admissible_kernel(0.1, 6), ZeroDensity(), 6)

    records, df_catalog, _ = compute_fixed_points(
        FlowSpec(system), [6, 5], SCHEDULE, CONTINUATION_KWARGS, n_jobs=1)

    assert [record.n for record in records] == [5, 6]
    assert np.allclose(df_catalog['action'], [12.5, 18.])
    assert all(FLAG_NOT_CERTIFIED not in record.flags for record in records)
    assert all(FLAG_TRIVIAL not in record.flags for record in records)
