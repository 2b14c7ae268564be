"""Run experiments from a configuration, writing artifacts and a manifest."""

import os
import json
import time
import logging
import platform
import warnings
from datetime import datetime, timezone

import numpy as np
import scipy
import pandas as pd

from convnls.version import __version__
from convnls.utils.errors import ContinuationError
from convnls.utils.dataframes import write_csv
from convnls.spectral.fields import basis_field
from convnls.spectral.io import load_field, save_field
from convnls.flow.free import free_flow
from convnls.flow.integrate import simulate
from convnls.hamiltonian.hofer import hofer_norm, hofer_gap
from convnls.floer.continuation import ContinuationState, continue_in_T, HOFER_LIMIT
from convnls.floer.snapshots import load_snapshot, save_snapshot
from convnls.floer.functionals import action_profile
from convnls.fixedpoint.extract import extract_candidate
from convnls.fixedpoint.catalog import save_catalog
from convnls.group import compute_fixed_points
from convnls.cli.config import (build_system, build_flow_spec, build_schedule, hofer_kwargs,
                                continuation_kwargs)

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)

EXPERIMENTS = ['simulate', 'hofer', 'strip', 'fixedpoints']


def run_experiment(config, kind, out_dir=None, **options):
    """Run one experiment and write its artifacts and a manifest.

    Parameters
    ----------
    config : RunConfig
        Run configuration.
    kind : {'simulate', 'hofer', 'strip', 'fixedpoints'}
        Experiment to run.
    out_dir : str, optional
        Output directory. Defaults to the 'out' configuration key.
    **options
        Paths specific to the experiment:

        - simulate: 'state_in', 'state_out', 'observables'
        - strip: 'resume', 'snapshot_dir'
        - fixedpoints: 'catalog'

    Returns
    -------
    manifest : dict
        Configuration hash, package versions, wall-clock time, status and artifact paths.

    Raises
    ------
    NumericalError
        Propagated from the pipelines. Any failure is recorded in the manifest before
        it is re-raised.

    Notes
    -----
    CSV artifacts only depend on the configuration, so two equal runs write identical files.
    Timestamps and timings are only written to the manifest.
    """

    if kind not in EXPERIMENTS:
        raise ValueError('Unknown experiment {!r}, choose from {}.'.format(kind, EXPERIMENTS))

    out_dir = config['out'] if out_dir is None else out_dir
    os.makedirs(out_dir, exist_ok=True)

    runner = {'simulate': _run_simulate, 'hofer': _run_hofer,
              'strip': _run_strip, 'fixedpoints': _run_fixedpoints}[kind]

    manifest = {'kind': kind, 'config': config.to_dict(), 'config_hash': config.hash(),
                'versions': package_versions(),
                'started': datetime.now(timezone.utc).isoformat(),
                'artifacts': [], 'warnings': [], 'status': 'ok'}

    start = time.perf_counter()
    caught = []

    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            runner(config, out_dir, manifest, **options)

    except Exception as err:
        manifest['status'] = 'error'
        manifest['error'] = {'type': type(err).__name__, 'message': str(err),
                             'residual': getattr(err, 'residual', None)}
        raise

    finally:
        for warning in caught:
            manifest['warnings'].append(str(warning.message))
            logger.warning('%s', warning.message)

        manifest['wall_clock'] = time.perf_counter() - start
        write_manifest(manifest, os.path.join(out_dir, 'manifest_{}.json'.format(kind)))

    return manifest


def package_versions():
    """Versions of convnls and its numerical stack."""

    return {'convnls': __version__, 'numpy': np.__version__, 'scipy': scipy.__version__,
            'pandas': pd.__version__, 'python': platform.python_version()}


def write_manifest(manifest, path):

    with open(path, 'w') as f_obj:
        json.dump(manifest, f_obj, indent=1, sort_keys=True, default=str)


def _run_simulate(config, out_dir, manifest, state_in=None, state_out=None, observables=None):
    """Integrate one field over [0, t1] and record observables."""

    spec = build_flow_spec(config)

    if state_in is None:
        field = basis_field(config['strip.mode'], config['k'])
    else:
        field = load_field(state_in).coeffs

    df_obs, final = simulate(spec, field, config['flow.record_every'])

    observables = os.path.join(out_dir, 'observables.csv') if observables is None \
        else observables
    write_csv(df_obs, observables)
    manifest['artifacts'].append(observables)

    # Stored states are in the original picture, u(t1) = phi0_t1 v(t1)
    state_out = os.path.join(out_dir, 'state_out.json') if state_out is None else state_out
    save_field(free_flow(final, spec.t1), state_out)
    manifest['artifacts'].append(state_out)

    logger.info('Simulated to t=%g: norm drift %.3g', spec.t1,
                float(np.max(np.abs(df_obs['norm'] - df_obs['norm'].iloc[0]))))


def _run_hofer(config, out_dir, manifest):
    """Estimate the Hofer norm, and optionally a truncation gap."""

    system = build_system(config)
    which = config['hofer.which']

    estimate = hofer_norm(system, which, **hofer_kwargs(config))

    summary = {'which': which, 'value': estimate.value, 'converged': estimate.converged,
               'below_limit': estimate.value < HOFER_LIMIT}

    if estimate.value >= HOFER_LIMIT:
        warnings.warn('Theorem hypothesis violated: Hofer norm estimate {:.4g} is not below '
                      'pi/4.'.format(estimate.value))

    path = os.path.join(out_dir, 'hofer_certificate.csv')
    write_csv(estimate.certificate, path)
    manifest['artifacts'].append(path)

    if config['hofer.gap'] is not None:
        gap = hofer_gap(system, config['k'], config['hofer.gap'], which, **hofer_kwargs(config))
        summary['gap'] = {'l': config['hofer.gap'], 'value': gap.value,
                          'converged': gap.converged}

        path = os.path.join(out_dir, 'hofer_gap_certificate.csv')
        write_csv(gap.certificate, path)
        manifest['artifacts'].append(path)

    path = os.path.join(out_dir, 'hofer.json')
    with open(path, 'w') as f_obj:
        json.dump(summary, f_obj, indent=1, sort_keys=True)
    manifest['artifacts'].append(path)
    manifest['hofer'] = summary

    logger.info('Hofer norm estimate of %s: %.8g', which, estimate.value)


def _run_strip(config, out_dir, manifest, resume=None, snapshot_dir=None):
    """Continue a strip through the schedule and write its log and profile."""

    system = build_system(config)
    schedule = build_schedule(config)

    hofer = hofer_norm(system, 'G', **hofer_kwargs(config)).value

    state = None
    if resume is not None:
        grid = load_snapshot(resume)
        state = ContinuationState(system, grid, schedule, hofer)
        logger.info('Resuming strip n=%d from T=%g', grid.n, grid.T)

    snapshot_dir = os.path.join(out_dir, 'snapshots') if snapshot_dir is None else snapshot_dir
    os.makedirs(snapshot_dir, exist_ok=True)

    mode = config['strip.mode'] if state is None else state.n

    try:
        state = continue_in_T(system, mode, schedule, hofer=hofer, snapshot_dir=snapshot_dir,
                              state=state, **continuation_kwargs(config))
    except ContinuationError as err:
        manifest['artifacts'].extend(err.state.snapshots)
        raise

    manifest['artifacts'].extend(state.snapshots)

    path = os.path.join(out_dir, 'continuation_log.csv')
    write_csv(state.log, path)
    manifest['artifacts'].append(path)

    path = os.path.join(out_dir, 'action_profile.csv')
    write_csv(action_profile(system, state.grid, config['strip.action_orientation']), path)
    manifest['artifacts'].append(path)

    path = os.path.join(out_dir, 'strip_final.json')
    save_snapshot(state.grid, path)
    manifest['artifacts'].append(path)

    candidate, info = extract_candidate(state, config['strip.action_orientation'], True)
    path = os.path.join(out_dir, 'candidate.json')
    save_field(candidate, path)
    manifest['artifacts'].append(path)
    manifest['slice'] = info


def _run_fixedpoints(config, out_dir, manifest, catalog=None):
    """Compute the fixed point catalog over the configured modes."""

    spec = build_flow_spec(config)

    strip_kwargs = continuation_kwargs(config)
    strip_kwargs.pop('orientation')
    strip_kwargs['hofer_kwargs'] = hofer_kwargs(config)
    newton_kwargs = {'tol': config['newton.tol'], 'max_iter': config['newton.max_iter']}

    records, df_catalog, _ = compute_fixed_points(
        spec, config['fixedpoints.modes'], build_schedule(config), strip_kwargs,
        newton_kwargs, config['strip.action_orientation'], n_jobs=config['threads'])

    catalog = os.path.join(out_dir, 'catalog.json') if catalog is None else catalog
    save_catalog(records, catalog)
    manifest['artifacts'].append(catalog)

    path = os.path.join(out_dir, 'catalog.csv')
    write_csv(df_catalog, path)
    manifest['artifacts'].append(path)

    logger.info('Cataloged %d fixed points', len(records))
