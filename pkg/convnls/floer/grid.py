"""Discretized strips with twisted periodic boundary data."""

import numpy as np

from convnls.spectral.fields import basis_field, dispersion_phases, get_k
from convnls.spectral.norms import compute_norm
from convnls.floer.cutoff import CutoffFamily

###################################################################################################
###################################################################################################

DEFAULT_MARGIN = 5.


class StripGrid:
    """Unit-sphere representatives of a strip u(s, t) on [-S, S] x [0, 1).

    Parameters
    ----------
    values : 3d array
        Field coefficients of shape (n_s, n_t, 2k+1), on the nodes s_i = -S + i ds and
        t_j = j / n_t.
    S : float
        Half-width of the strip.
    T : float
        Cut-off parameter of the equation solved by the strip.
    n : int
        Asymptotic mode, so that the boundary columns represent u0_n.

    Notes
    -----
    The row t = 1 is not stored. It is defined as phi0_1 applied to the row t = 0, so the
    twisted boundary condition u(s, 1) = phi0_1(u(s, 0)) holds exactly.

    The strip is handled internally in the co-moving frame w(s, t) = phi0_{-t} u(s, t),
    which is periodic in t.
    """

    def __init__(self, values, S, T, n):

        values = np.array(values, dtype=complex)

        if values.ndim != 3:
            raise ValueError('Strip values must have shape (n_s, n_t, 2k+1).')

        if values.shape[0] < 4 or values.shape[1] < 3:
            raise ValueError('Strips need at least 4 columns in s and 3 rows in t.')

        if abs(n) > get_k(values):
            raise ValueError('Mode {} is outside the cut-off k={}.'.format(n, get_k(values)))

        self.values = values
        self.S = float(S)
        self.T = float(T)
        self.n = int(n)


    def __repr__(self):

        return 'StripGrid(n={}, T={}, S={}, shape={})'.format(
            self.n, self.T, self.S, self.values.shape)


    @property
    def n_s(self):

        return self.values.shape[0]


    @property
    def n_t(self):

        return self.values.shape[1]


    @property
    def k(self):

        return get_k(self.values)


    @property
    def s(self):

        return np.linspace(-self.S, self.S, self.n_s)


    @property
    def t(self):

        return np.arange(self.n_t) / self.n_t


    @property
    def ds(self):

        return 2 * self.S / (self.n_s - 1)


    @property
    def dt(self):

        return 1. / self.n_t


    @property
    def cutoff(self):

        return CutoffFamily(self.T)(self.s)


    def copy(self):

        return StripGrid(self.values.copy(), self.S, self.T, self.n)


    def with_T(self, T):
        """Return a copy of the strip with another cut-off parameter."""

        return StripGrid(self.values.copy(), self.S, T, self.n)


    def comoving(self):
        """Co-moving representatives w(s, t) = phi0_{-t} u(s, t)."""

        return self.values * dispersion_phases(self.k, -self.t)[None, :, :]


    @classmethod
    def from_comoving(cls, comoving, S, T, n):
        """Build a strip from co-moving representatives."""

        k = get_k(comoving)
        n_t = np.shape(comoving)[1]

        return cls(comoving * dispersion_phases(k, np.arange(n_t) / n_t)[None, :, :], S, T, n)


    def last_row(self):
        """The row t = 1, given by phi0_1 applied to the row t = 0."""

        return self.values[:, 0] * dispersion_phases(self.k, 1.)


    def node_norms(self):

        return compute_norm(self.values)


def strip_half_width(T_max, margin=DEFAULT_MARGIN):
    """Half-width S = T_hat(T_max) + margin of strips along a continuation."""

    return CutoffFamily(T_max).T_hat + margin


def constant_strip(n, k, T=0., S=None, n_s=64, n_t=16, margin=DEFAULT_MARGIN):
    """The strip u(s, t) = phi0_t(u0_n), which solves the equation at T = 0.

    Parameters
    ----------
    n : int
        Asymptotic mode.
    k : int
        Mode cut-off.
    T : float, optional, default: 0.
        Cut-off parameter.
    S : float, optional
        Half-width. Defaults to the support bound of T plus the margin.
    n_s, n_t : int, optional, default: 64, 16
        Number of nodes in s and t.
    margin : float, optional, default: 5.
        Margin past the support of the cut-off.

    Returns
    -------
    grid : StripGrid
        Constant strip.
    """

    S = strip_half_width(T, margin) if S is None else S
    comoving = np.broadcast_to(basis_field(n, k), (n_s, n_t, 2 * k + 1))

    return StripGrid.from_comoving(comoving, S, T, n)
