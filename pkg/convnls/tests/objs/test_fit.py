"""Tests for the Strips and FixedPoints objects."""

import os

from pytest import raises

import numpy as np
import pandas as pd

from convnls import Strips, FixedPoints
from convnls.flow.integrate import FlowSpec
from convnls.spectral.fields import basis_field
from convnls.tests.tutils import plot_test
from convnls.tests.settings import N_S, N_T, MARGIN, SCHEDULE, BASE_TEST_FILE_PATH

###################################################################################################
###################################################################################################

def test_strips():
    """Test initializing a Strips object."""

    strips = Strips(SCHEDULE)

    assert strips.schedule == SCHEDULE
    assert strips.orientation == -1
    assert strips.solver_kwargs == {}

    defaults = [strips.state, strips.system, strips.n]
    assert defaults == [None] * len(defaults)

    with raises(ValueError):
        strips.grid

    with raises(ValueError):
        Strips([1., 2.])


def test_strips_fit(system_free):

    strips = Strips(SCHEDULE, n_s=N_S, n_t=N_T, margin=MARGIN)
    strips.fit(system_free, 2, hofer=0.)

    assert strips.n == 2
    assert strips.grid.T == SCHEDULE[-1]
    assert isinstance(strips.log, pd.DataFrame)

    candidate, info = strips.extract(return_slice=True)
    assert np.array_equal(candidate, basis_field(2, system_free.k))
    assert np.isclose(info['action'], 2.)


def test_strips_save_load(system_gp):

    path = os.path.join(BASE_TEST_FILE_PATH, 'test_strips.json')

    partial = Strips(SCHEDULE[:2], n_s=N_S, n_t=N_T, margin=MARGIN)
    partial.fit(system_gp, 1, hofer=0.)
    partial.save(path)

    strips = Strips(SCHEDULE)
    strips.load(system_gp, path, hofer=0.)

    assert strips.n == 1
    assert (strips.n_s, strips.n_t) == (N_S, N_T)
    assert strips.state.T == SCHEDULE[1]

    strips.resume()
    assert strips.grid.T == SCHEDULE[-1]
    assert strips.log['residual'].iloc[-1] <= strips.tol_res

    with raises(ValueError):
        Strips([0., 0.25]).load(system_gp, path)


@plot_test
def test_strips_plot(system_free):

    strips = Strips(SCHEDULE, n_s=N_S, n_t=N_T, margin=MARGIN)

    with raises(ValueError):
        strips.plot()

    strips.fit(system_free, 1, hofer=0.)
    strips.plot()


def test_fixed_points(system_free):

    fps = FixedPoints(SCHEDULE, {'n_s': N_S, 'n_t': N_T, 'margin': MARGIN, 'hofer': 0.})

    assert len(fps) == 0
    assert fps.df_catalog is None

    with raises(ValueError):
        fps.fit(FlowSpec(system_free), [])

    with raises(ValueError):
        fps.to_json(os.path.join(BASE_TEST_FILE_PATH, 'test_fps.json'))

    fps.fit(FlowSpec(system_free), [3, 1], n_jobs=1)

    assert len(fps) == 2
    assert fps[0].n == 1
    assert [record.n for record in fps] == [1, 3]
    assert np.allclose(fps.actions, [0.5, 4.5])

    path = os.path.join(BASE_TEST_FILE_PATH, 'test_fps.json')
    fps.to_json(path)
    assert os.path.exists(path)


@plot_test
def test_fixed_points_plot(system_free):

    fps = FixedPoints(SCHEDULE, {'n_s': N_S, 'n_t': N_T, 'margin': MARGIN, 'hofer': 0.})

    with raises(ValueError):
        fps.plot()

    fps.fit(FlowSpec(system_free), [1, 2], n_jobs=1)
    fps.plot()
