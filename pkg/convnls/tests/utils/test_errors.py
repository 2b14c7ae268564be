"""Tests for utils.errors."""

from pytest import raises

from convnls.utils.errors import *

###################################################################################################
###################################################################################################

def test_config_error():

    err = ConfigError('Value must be positive.', key='flow.dt')
    assert err.key == 'flow.dt'
    assert "key 'flow.dt'" in str(err)

    err = ConfigError('Malformed configuration.', line=3, col=7)
    assert 'line 3, column 7' in str(err)

    assert isinstance(err, ValueError)


def test_snapshot_error():

    err = SnapshotError('Corrupted snapshot', path='strip.json')
    assert err.path == 'strip.json'
    assert 'strip.json' in str(err)


def test_numerical_errors():

    for err in [IntegratorStepError('drift', drift=1e-3), StripSolveError('solve', residual=2.),
                ContinuationError('continuation', residual=3.), NewtonError('newton', residual=4.)]:

        assert isinstance(err, NumericalError)
        assert err.residual is not None

        with raises(NumericalError):
            raise err
