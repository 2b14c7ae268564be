"""Run configuration: flat dotted keys in one JSON file, merged over defaults."""

import json
import hashlib

import numpy as np

from convnls.utils.errors import ConfigError
from convnls.spectral.kernels import make_admissible_kernel
from convnls.spectral.io import load_field
from convnls.hamiltonian.density import create_density, DENSITY_KINDS
from convnls.hamiltonian.system import HamiltonianSystem
from convnls.flow.integrate import FlowSpec

###################################################################################################
###################################################################################################

DEFAULTS = {
    'k': 8,
    'seed': 0,
    'threads': 1,
    'out': 'convnls_out',
    # Kernel: admissible geometric profile, or a kernel JSON file
    'kernel.delta': 0.5,
    'kernel.profile': 'geometric',
    'kernel.amplitude': 1.,
    'kernel.decay': 0.5,
    'kernel.modes': None,
    'kernel.file': None,
    # Density f(r, x, t)
    'density.kind': 'gp',
    'density.coupling': 0.05,
    'density.potential': 0.,
    'density.lam': 1.,
    'density.table': None,
    # Time integration
    'flow.dt': 1e-3,
    'flow.t1': 1.,
    'flow.drift_tol': 1e-6,
    'flow.record_every': 10,
    # Hofer norm estimator
    'hofer.which': 'G',
    'hofer.nodes': 8,
    'hofer.starts': 32,
    'hofer.tol': 1e-9,
    'hofer.max_iter': 5000,
    'hofer.gap': None,
    # Strips and continuation
    'strip.mode': 1,
    'strip.T_max': 20.,
    'strip.steps': 20,
    'strip.n_s': 64,
    'strip.n_t': 16,
    'strip.margin': 5.,
    'strip.tol': 1e-8,
    'strip.min_step': 1e-3,
    'strip.max_iter': 50,
    'strip.action_orientation': -1,
    # Fixed point refinement
    'fixedpoints.modes': [5, 6, 7, 8],
    'newton.tol': 1e-9,
    'newton.max_iter': 20,
}

POSITIVE_KEYS = ['flow.dt', 'flow.t1', 'flow.drift_tol', 'hofer.tol', 'strip.T_max',
                 'strip.margin', 'strip.tol', 'strip.min_step', 'newton.tol', 'kernel.delta']

INTEGER_KEYS = ['k', 'seed', 'threads', 'flow.record_every', 'hofer.nodes', 'hofer.starts',
                'hofer.max_iter', 'strip.mode', 'strip.steps', 'strip.n_s', 'strip.n_t',
                'strip.max_iter', 'newton.max_iter']

# Keys without a default value, and the type of a value when one is given
OPTIONAL_KEYS = {'kernel.modes': int, 'kernel.file': str, 'density.table': str, 'hofer.gap': int}


class RunConfig:
    """Validated run configuration.

    Parameters
    ----------
    values : dict, optional
        Flat dotted keys overriding :data:`DEFAULTS`.

    Raises
    ------
    ConfigError
        For unknown keys, values of the wrong type, or out of range values.

    Examples
    --------
    >>> config = RunConfig({'k': 4, 'density.kind': 'linear'})
    >>> config['k'], config['flow.dt']
    (4, 0.001)
    """

    def __init__(self, values=None):

        merged = dict(DEFAULTS)

        for key, value in (values or {}).items():

            if key not in DEFAULTS:
                raise ConfigError('Unknown configuration key.', key=key)

            merged[key] = _coerce(key, value)

        self._values = merged
        self._validate()


    def __repr__(self):

        return 'RunConfig(hash={})'.format(self.hash()[:12])


    def __getitem__(self, key):

        if key not in self._values:
            raise ConfigError('Unknown configuration key.', key=key)

        return self._values[key]


    def __eq__(self, other):

        return isinstance(other, RunConfig) and self._values == other._values


    def to_dict(self):

        return dict(self._values)


    def update(self, overrides):
        """Return a new configuration with some keys replaced. None values are ignored."""

        values = dict(self._values)
        values.update({key: val for key, val in overrides.items() if val is not None})

        return RunConfig(values)


    def hash(self):
        """Sha256 hex digest of the canonical JSON of the merged configuration."""

        canonical = json.dumps(self._values, sort_keys=True, separators=(',', ':'))

        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


    def _validate(self):

        for key in POSITIVE_KEYS:
            if not self._values[key] > 0:
                raise ConfigError('Value must be positive.', key=key)

        if self['seed'] < 0:
            raise ConfigError('The seed must be a non-negative integer.', key='seed')

        if self['k'] < 0:
            raise ConfigError('The mode cut-off must be non-negative.', key='k')

        if self['density.kind'] not in DENSITY_KINDS:
            raise ConfigError('Density kind must be one of {}.'.format(DENSITY_KINDS),
                              key='density.kind')

        if self['density.kind'] == 'custom-table' and self['density.table'] is None:
            raise ConfigError('A custom-table density requires a table file.',
                              key='density.table')

        if self['kernel.modes'] is not None and self['kernel.modes'] < 0:
            raise ConfigError('The kernel cut-off must be non-negative.', key='kernel.modes')

        if self['hofer.gap'] is not None and not 0 <= self['hofer.gap'] <= self['k']:
            raise ConfigError('The truncation gap cut-off must lie in [0, k].', key='hofer.gap')

        if self['hofer.which'] not in ('F', 'G'):
            raise ConfigError("Must be 'F' or 'G'.", key='hofer.which')

        if self['strip.action_orientation'] not in (-1, 1):
            raise ConfigError('Orientation must be -1 or 1.', key='strip.action_orientation')

        if self['strip.n_s'] < 4 or self['strip.n_t'] < 3:
            raise ConfigError('Strip grids need at least 4 nodes in s and 3 in t.',
                              key='strip.n_s' if self['strip.n_s'] < 4 else 'strip.n_t')

        if self['threads'] == 0 or self['threads'] < -1:
            raise ConfigError('Threads must be a positive integer or -1.', key='threads')


def _coerce(key, value):
    """Check a value against the type of its default, or its declared type if optional."""

    default = DEFAULTS[key]

    if key in OPTIONAL_KEYS:
        kind = OPTIONAL_KEYS[key]
        if value is None:
            return value
        if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
            raise ConfigError('Expected an integer or null, got {!r}.'.format(value), key=key)
        if kind is str and not isinstance(value, str):
            raise ConfigError('Expected a path or null, got {!r}.'.format(value), key=key)
        return value

    if key in INTEGER_KEYS or (key == 'strip.action_orientation'):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError('Expected an integer, got {!r}.'.format(value), key=key)
        return value

    if isinstance(default, float):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError('Expected a number, got {!r}.'.format(value), key=key)
        return float(value)

    if isinstance(default, list):
        if not isinstance(value, list) or not all(isinstance(val, int) for val in value):
            raise ConfigError('Expected a list of integers, got {!r}.'.format(value), key=key)
        return list(value)

    if isinstance(default, str) and not isinstance(value, str):
        raise ConfigError('Expected a string, got {!r}.'.format(value), key=key)

    return value


def load_config(path=None, overrides=None):
    """Load a configuration file and apply command line overrides.

    Parameters
    ----------
    path : str, optional
        JSON file holding one object of flat dotted keys. If None, defaults are used.
    overrides : dict, optional
        Keys to replace after loading. None values are ignored.

    Returns
    -------
    config : RunConfig
        Merged configuration.

    Raises
    ------
    ConfigError
        If the file cannot be read or parsed, naming the line and column, or if a key is
        invalid, naming the key.
    """

    values = {}

    if path is not None:

        try:
            with open(path, 'r') as f_obj:
                text = f_obj.read()
        except OSError as err:
            raise ConfigError("Cannot read configuration file '{}': {}".format(
                path, err.strerror)) from err

        try:
            values = json.loads(text)
        except json.JSONDecodeError as err:
            raise ConfigError('Malformed configuration: {}'.format(err.msg),
                              line=err.lineno, col=err.colno) from err

        if not isinstance(values, dict):
            raise ConfigError('The configuration must be a JSON object.', line=1, col=1)

    values.update({key: val for key, val in (overrides or {}).items() if val is not None})

    return RunConfig(values)


def build_kernel(config):
    """Kernel from a kernel file, or an admissible kernel from the profile keys."""

    if config['kernel.file'] is not None:
        return load_field(config['kernel.file'], kernel=True)

    modes = config['k'] if config['kernel.modes'] is None else config['kernel.modes']

    return make_admissible_kernel(config['kernel.delta'], modes, config['kernel.profile'],
                                  config['kernel.amplitude'], config['kernel.decay'])


def build_density(config):
    """Density model from the density keys."""

    return create_density(config['density.kind'], coupling=config['density.coupling'],
                          potential=config['density.potential'], lam=config['density.lam'],
                          table=config['density.table'])


def build_system(config):
    """Hamiltonian system at cut-off k."""

    return HamiltonianSystem(build_kernel(config), build_density(config), config['k'])


def build_flow_spec(config, system=None):
    """Integration settings over [0, flow.t1]."""

    system = build_system(config) if system is None else system

    return FlowSpec(system, config['flow.dt'], 0., config['flow.t1'], config['flow.drift_tol'])


def build_schedule(config):
    """Evenly spaced schedule of strip.steps increments from 0 to strip.T_max."""

    return np.linspace(0., config['strip.T_max'], config['strip.steps'] + 1).tolist()


def hofer_kwargs(config):
    """Keyword arguments of :func:`~.hofer_norm` from the hofer keys."""

    return {'n_nodes': config['hofer.nodes'], 'n_starts': config['hofer.starts'],
            'tol': config['hofer.tol'], 'max_iter': config['hofer.max_iter'],
            'seed': config['seed'], 'n_jobs': config['threads']}


def continuation_kwargs(config):
    """Keyword arguments of :func:`~.continue_in_T` from the strip keys."""

    return {'tol_res': config['strip.tol'], 'min_step': config['strip.min_step'],
            'n_s': config['strip.n_s'], 'n_t': config['strip.n_t'],
            'margin': config['strip.margin'], 'orientation': config['strip.action_orientation'],
            'solver_kwargs': {'max_iter': config['strip.max_iter']}}
