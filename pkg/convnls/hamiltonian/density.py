"""Nonlinear densities f(r, x, t) of the smoothed interaction Hamiltonian.

Notes
-----
Densities are evaluated on batched collocation samples: ``r`` has shape (..., n_grid), ``x``
has shape (n_grid,), and ``t`` broadcasts against ``r`` with a trailing axis of length one.
All densities are 1-periodic in t.
"""

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from convnls.utils.checks import check_param_options

###################################################################################################
###################################################################################################

DENSITY_KINDS = ['gp', 'linear', 'zero', 'custom-table']


class DensityModel:
    """Base class for a density f(r, x, t), with r = |w|^2 the local intensity."""

    kind = None

    def f(self, r, x, t):
        """Density values."""

        raise NotImplementedError


    def d1f(self, r, x, t):
        """Derivative of the density with respect to r."""

        raise NotImplementedError


    @property
    def is_zero(self):
        """Whether the density vanishes identically."""

        return False


class ZeroDensity(DensityModel):
    """Identically vanishing density, for which the flow is the free flow."""

    kind = 'zero'

    def f(self, r, x, t):

        return np.zeros(np.broadcast(r, x, t).shape)


    def d1f(self, r, x, t):

        return np.zeros(np.broadcast(r, x, t).shape)


    @property
    def is_zero(self):

        return True


class LinearDensity(DensityModel):
    """Linear density f = lambda * r."""

    kind = 'linear'

    def __init__(self, lam=1.):

        self.lam = float(lam)


    def f(self, r, x, t):

        return self.lam * np.broadcast_to(r, np.broadcast(r, x, t).shape)


    def d1f(self, r, x, t):

        return np.full(np.broadcast(r, x, t).shape, self.lam)


    @property
    def is_zero(self):

        return self.lam == 0


class GrossPitaevskiiDensity(DensityModel):
    """Gross-Pitaevskii type density f = c/2 r^2 + V(t, x) r.

    Parameters
    ----------
    coupling : float
        Interaction strength c.
    potential : float, optional, default: 0.
        Amplitude a of the time-periodic potential V(t, x) = a cos(x) (1 + cos(2 pi t)).
    """

    kind = 'gp'

    def __init__(self, coupling, potential=0.):

        self.coupling = float(coupling)
        self.potential = float(potential)


    def potential_values(self, x, t):
        """Evaluate V(t, x)."""

        return self.potential * np.cos(x) * (1 + np.cos(2 * np.pi * np.asarray(t)))


    def f(self, r, x, t):

        return 0.5 * self.coupling * r ** 2 + self.potential_values(x, t) * r


    def d1f(self, r, x, t):

        return self.coupling * r + self.potential_values(x, t)


    @property
    def is_zero(self):

        return self.coupling == 0 and self.potential == 0


class TableDensity(DensityModel):
    """Density interpolated from a table on an (r, x, t) lattice.

    Parameters
    ----------
    r_vals, x_vals, t_vals : 1d array
        Lattice coordinates. The x lattice must span [0, 2pi] and the t lattice [0, 1], with
        matching endpoint values, so that the interpolant is periodic.
    values : 3d array
        Density values, of shape (len(r_vals), len(x_vals), len(t_vals)).
    fd_step : float, optional, default: 1e-5
        Step of the central difference used for the r derivative.

    Notes
    -----
    Values outside the r lattice are extrapolated from the boundary cubic.
    """

    kind = 'custom-table'

    def __init__(self, r_vals, x_vals, t_vals, values, fd_step=1e-5):

        r_vals, x_vals, t_vals = (np.asarray(vals, dtype=float) for vals in
                                  (r_vals, x_vals, t_vals))
        values = np.asarray(values, dtype=float)

        if values.shape != (len(r_vals), len(x_vals), len(t_vals)):
            raise ValueError('Table values must have shape (n_r, n_x, n_t).')

        if not (np.isclose(x_vals[0], 0) and np.isclose(x_vals[-1], 2 * np.pi) and
                np.isclose(t_vals[0], 0) and np.isclose(t_vals[-1], 1)):
            raise ValueError('The table lattice must span x in [0, 2pi] and t in [0, 1].')

        self.lattice = (r_vals, x_vals, t_vals)
        self.fd_step = fd_step
        self._interp = RegularGridInterpolator(self.lattice, values, method='cubic',
                                               bounds_error=False, fill_value=None)


    @classmethod
    def from_file(cls, path, **kwargs):
        """Load a table from an npz file with arrays 'r', 'x', 't' and 'f'."""

        with np.load(path) as data:
            return cls(data['r'], data['x'], data['t'], data['f'], **kwargs)


    def f(self, r, x, t):

        r, x, t = np.broadcast_arrays(r, x, t)
        points = np.stack([r, np.mod(x, 2 * np.pi), np.mod(t, 1.)], axis=-1)

        return self._interp(points.reshape(-1, 3)).reshape(r.shape)


    def d1f(self, r, x, t):

        step = self.fd_step

        return (self.f(r + step, x, t) - self.f(r - step, x, t)) / (2 * step)


def create_density(kind, **params):
    """Create a density model by name.

    Parameters
    ----------
    kind : {'gp', 'linear', 'zero', 'custom-table'}
        Type of density.
    **params
        Parameters of the density: 'coupling' and 'potential' for 'gp', 'lam' for 'linear',
        and 'table' (path to an npz file) for 'custom-table'.

    Returns
    -------
    density : DensityModel
        Density instance.

    Examples
    --------
    >>> density = create_density('gp', coupling=0.1, potential=0.05)
    >>> density.kind
    'gp'
    """

    check_param_options(kind, 'kind', DENSITY_KINDS)

    if kind == 'gp':
        density = GrossPitaevskiiDensity(params.get('coupling', 0.), params.get('potential', 0.))
    elif kind == 'linear':
        density = LinearDensity(params.get('lam', 1.))
    elif kind == 'zero':
        density = ZeroDensity()
    else:
        density = TableDensity.from_file(params['table'])

    return density
