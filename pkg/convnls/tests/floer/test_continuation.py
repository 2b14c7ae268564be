"""Tests for floer.continuation."""

import os

from pytest import raises, warns

import numpy as np

from convnls.utils.errors import ContinuationError
from convnls.floer.snapshots import load_snapshot
from convnls.floer.continuation import *
from convnls.tests.settings import N_S, N_T, MARGIN, SCHEDULE, BASE_TEST_FILE_PATH

###################################################################################################
###################################################################################################

def test_check_schedule():

    assert check_schedule([0, 1, 2]) == [0., 1., 2.]

    for schedule in [[], [0.5, 1.], [0., 1., 1.], [0., 2., 1.]]:
        with raises(ValueError):
            check_schedule(schedule)


def test_continue_in_T_free(state_free):

    assert state_free.accepted == SCHEDULE
    assert state_free.T == SCHEDULE[-1]
    assert state_free.n == 1

    log = state_free.log
    assert list(log.columns) == LOG_COLUMNS
    assert np.all(log['iterations'] == 0)
    assert np.allclose(log['energy'], 0.)
    assert np.allclose(log[['action_min', 'action_max']], 0.5)

    assert set(state_free.profiles) == set(SCHEDULE)


def test_continue_in_T(state_gp):

    log = state_gp.log

    assert state_gp.accepted == SCHEDULE
    assert np.all(log['residual'] <= 1e-8)
    assert log['energy'].iloc[0] < 1e-20
    assert np.all(log['energy'] >= 0)
    assert np.all(log['defect_min'] >= 0)


def test_continue_in_T_hofer(system_free):

    state = continue_in_T(system_free, 0, [0., 1.], n_s=8, n_t=4, margin=1.,
                          hofer_kwargs={'n_nodes': 2, 'n_starts': 1})
    assert state.hofer == 0.

    with warns(UserWarning, match='Theorem hypothesis violated'):
        continue_in_T(system_free, 0, [0., 1.], n_s=8, n_t=4, margin=1., hofer=1.)


def test_continue_in_T_errors(system_gp):

    with raises(ValueError):
        continue_in_T(system_gp, system_gp.k + 1, SCHEDULE, hofer=0.)

    with raises(ContinuationError) as excinfo:
        continue_in_T(system_gp, 1, SCHEDULE, min_step=0.1, n_s=N_S, n_t=N_T, margin=MARGIN,
                      hofer=0., solver_kwargs={'max_iter': 0})

    assert excinfo.value.state.accepted == [0.]


def test_continue_in_T_resume(system_gp):

    snapshot_dir = os.path.join(BASE_TEST_FILE_PATH, 'snapshots')
    os.makedirs(snapshot_dir, exist_ok=True)

    kwargs = {'n_s': N_S, 'n_t': N_T, 'margin': MARGIN, 'hofer': 0.}
    full = continue_in_T(system_gp, 1, SCHEDULE, snapshot_dir=snapshot_dir, **kwargs)

    assert len(full.snapshots) == len(SCHEDULE)
    assert all(os.path.exists(path) for path in full.snapshots)

    grid = load_snapshot(full.snapshots[1])
    state = ContinuationState(system_gp, grid, SCHEDULE, 0.)
    resumed = continue_in_T(system_gp, 1, SCHEDULE, state=state, **kwargs)

    assert resumed.accepted == [SCHEDULE[-1]]
    assert np.allclose(resumed.log.values[-1], full.log.values[-1], rtol=0, atol=1e-12)
    assert np.allclose(resumed.grid.values, full.grid.values, rtol=0, atol=1e-12)
