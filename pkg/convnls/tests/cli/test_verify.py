"""Tests for cli.verify."""

import os
import json

import numpy as np

from convnls.spectral import make_admissible_kernel
from convnls.spectral.fields import random_fields
from convnls.spectral.norms import normalize
from convnls.hamiltonian import HamiltonianSystem, ZeroDensity
from convnls.hamiltonian.hofer import hofer_norm, hofer_gap
from convnls.flow.integrate import FlowSpec
from convnls.floer.grid import StripGrid
from convnls.floer.continuation import continue_in_T
from convnls.floer.snapshots import load_snapshot, save_snapshot
from convnls.cli.config import RunConfig, build_system
from convnls.cli.experiments import run_experiment
from convnls.cli.verify import *
from convnls.tests.settings import BASE_TEST_FILE_PATH, N_S, N_T, MARGIN, SCHEDULE

###################################################################################################
###################################################################################################

FREE_CONFIG = {'k': 2, 'density.kind': 'zero', 'flow.dt': 0.01, 'hofer.nodes': 2,
               'hofer.starts': 2, 'strip.T_max': 1., 'strip.steps': 2, 'strip.n_s': 12,
               'strip.n_t': 4, 'strip.margin': 1.}


def test_run_verify():

    config = RunConfig(FREE_CONFIG)
    out_dir = os.path.join(BASE_TEST_FILE_PATH, 'verify')

    strip_dir = os.path.join(BASE_TEST_FILE_PATH, 'verify_strip')
    run_experiment(config, 'strip', strip_dir)
    snapshot = os.path.join(strip_dir, 'strip_final.json')
    listing = sorted(os.listdir(strip_dir))

    report = run_verify(config, out_dir, snapshots=[snapshot], n_fields=10)

    assert report['passed']
    assert report['config_hash'] == config.hash()

    names = [check['name'] for check in report['checks']]
    for name in ['free_multipliers', 'norm_conservation', 'perpendicularity', 'gradients',
                 'truncation_bound', 'action_anchor', 'rk4_order', 'hofer_F_G',
                 'strip_energy', 'slice_defect', 'action_window', 'energy_identity',
                 'residual_gauge', 'confinement', 'normal_energy', 'newton_residual',
                 'multiplier_modulus', 'action_separation', 'strip_order',
                 'resume_strip_final.json']:
        assert name in names

    # Resuming leaves the snapshot directory as it was
    assert sorted(os.listdir(strip_dir)) == listing

    with open(os.path.join(out_dir, 'verify_report.json'), 'r') as f_obj:
        assert json.load(f_obj)['passed']


def test_summarize():

    report = {'checks': [{'name': 'gradients', 'passed': True, 'value': 1e-9,
                          'threshold': 1e-6},
                         {'name': 'rk4_order', 'passed': False, 'value': 12.,
                          'threshold': 18.}],
              'warnings': ['Theorem hypothesis violated']}

    summary = summarize(report)

    assert 'FAIL' in summary
    assert 'warning: Theorem hypothesis violated' in summary
    assert summary.splitlines()[-1] == '1 of 2 checks passed'


def test_property_checks(system_gp, rng):

    fields = random_fields(rng, system_gp.k, 10)

    assert check_free_multipliers(4)['passed']
    assert check_perpendicularity(system_gp, fields, rng.uniform(0, 1, 10))['passed']
    assert check_gradients(system_gp, rng, 10)['passed']
    assert check_truncation_bound(system_gp.psi, fields, ks=(1, 2))['passed']
    assert check_action_anchor(system_gp)['passed']

    result = check_conservation(FlowSpec(system_gp, dt=0.5, drift_tol=1e-15), fields)
    assert not result['passed']
    assert 'error' in result


def test_strip_checks(system_gp, state_gp):

    hofer = hofer_norm(system_gp, n_nodes=4, n_starts=4).value

    results = check_strip_bounds(system_gp, state_gp, hofer)
    assert [result['name'] for result in results] == ['strip_energy', 'slice_defect',
                                                       'action_window']
    assert all(result['passed'] for result in results)

    # The interaction gives the strip a positive energy
    assert not check_strip_bounds(system_gp, state_gp, 0.)[0]['passed']

    assert check_energy_identity(system_gp, state_gp.grid)['passed']
    assert check_residual_gauge(system_gp, state_gp.grid)['passed']


def test_check_confinement(system_gp, state_gp):

    gap = hofer_gap(system_gp, system_gp.kernel_modes, 2, n_nodes=2, n_starts=2).value
    confinement, normal_energy = check_confinement(system_gp, state_gp, 2, gap, n_s=N_S,
                                                   n_t=N_T, margin=MARGIN)

    assert confinement['passed']
    assert confinement['value'] <= 1e-12
    assert normal_energy['passed']


def test_check_fixed_point_closure(system_gp, flow_spec_gp):

    state = continue_in_T(system_gp, 0, SCHEDULE, n_s=N_S, n_t=N_T, margin=MARGIN, hofer=0.)
    results = check_fixed_point_closure(flow_spec_gp, state, 1e-9, 20)

    assert [result['name'] for result in results] == ['newton_residual', 'multiplier_modulus']
    assert all(result['passed'] for result in results)


def test_check_separation():

    system = HamiltonianSystem(make_admissible_kernel(0.1, 6), ZeroDensity(), 6)
    states = [continue_in_T(system, mode, SCHEDULE, n_s=N_S, n_t=N_T, margin=MARGIN, hofer=0.)
              for mode in [6, 5]]

    result = check_separation(system, states)

    assert result['passed']
    assert np.isclose(result['value'], 18. - 12.5)
    assert np.isclose(result['window_gap'], 18. - 12.5)
    assert result['modes'] == [6, 5]

    # Actions 0.5 and 2 are closer than pi
    close = [continue_in_T(system, mode, SCHEDULE, n_s=N_S, n_t=N_T, margin=MARGIN, hofer=0.)
             for mode in [1, 2]]
    assert not check_separation(system, close)['passed']

    assert check_separation(system, [])['passed']


def test_check_strip_order(system_free):

    result = check_strip_order(system_free, 1, 1., 0., n_s=N_S, n_t=N_T, margin=MARGIN)

    assert result['passed']
    assert result['ratio'] is None
    assert len(result['energies']) == 3


def test_check_resume(rng):

    config = RunConfig(FREE_CONFIG)
    system = build_system(config)

    strip_dir = os.path.join(BASE_TEST_FILE_PATH, 'resume_strip')
    run_experiment(config, 'strip', strip_dir)
    snapshot = os.path.join(strip_dir, 'strip_final.json')

    result = check_resume(system, snapshot, config)
    assert result['passed']
    assert result['value'] <= 1e-10

    # A strip the configured run never reached does not resume to the same run
    grid = load_snapshot(snapshot)
    values = grid.values.copy()
    shape = values[1:-1].shape
    values[1:-1] += 1e-3 * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))

    perturbed = os.path.join(strip_dir, 'strip_perturbed.json')
    save_snapshot(StripGrid(normalize(values), grid.S, grid.T, grid.n), perturbed)

    result = check_resume(system, perturbed, config)
    assert not result['passed']
    assert result['value'] > 1e-6
