"""Truncated Fourier representations of fields on the circle."""

import numpy as np

from convnls.utils.checks import check_param_range

###################################################################################################
###################################################################################################

def get_modes(k):
    """Integer frequencies of a field with mode cut-off k, ordered -k ... k."""

    check_param_range(k, 'k', (0, np.inf))

    return np.arange(-int(k), int(k) + 1)


def get_k(coeffs):
    """Mode cut-off of a coefficient array, read from its last axis."""

    n_coeffs = np.shape(coeffs)[-1]

    if n_coeffs % 2 == 0:
        raise ValueError('Coefficient arrays must have an odd length 2k+1 along the last axis.')

    return (n_coeffs - 1) // 2


def as_coeffs(field):
    """Return the coefficient array of a field, which may be a FourierField or an array."""

    if isinstance(field, FourierField):
        return field.coeffs

    return np.asarray(field, dtype=complex)


def grid_size(k):
    """Number of collocation points used for pointwise products at mode cut-off k.

    Parameters
    ----------
    k : int
        Mode cut-off.

    Returns
    -------
    n_grid : int
        Smallest power of two that is at least ``4k + 4`` (and at least 8).

    Notes
    -----
    Products of the form ``g(|w|^2) w`` with a band limited ``w`` are free of aliasing on
    the modes ``|n| <= k`` once ``n_grid > 4k + 1``.
    """

    check_param_range(k, 'k', (0, np.inf))

    return int(max(8, 2 ** int(np.ceil(np.log2(4 * k + 4)))))


def grid_points(n_grid):
    """Equispaced collocation points on [0, 2pi)."""

    return 2 * np.pi * np.arange(n_grid) / n_grid


def resize_coeffs(coeffs, k):
    """Zero pad or truncate coefficient arrays along the last axis to mode cut-off k."""

    coeffs = np.asarray(coeffs, dtype=complex)
    k_in = get_k(coeffs)

    if k == k_in:
        return coeffs.copy()

    out = np.zeros(coeffs.shape[:-1] + (2 * k + 1,), dtype=complex)
    k_min = min(k, k_in)
    out[..., k - k_min:k + k_min + 1] = coeffs[..., k_in - k_min:k_in + k_min + 1]

    return out


def to_grid(coeffs, n_grid=None):
    """Evaluate u(x) = sum_n c(n) exp(inx) on the collocation grid.

    Parameters
    ----------
    coeffs : ndarray or FourierField
        Coefficients ordered -k ... k along the last axis. Leading axes are batched.
    n_grid : int, optional
        Number of grid points. Defaults to :func:`grid_size`.

    Returns
    -------
    samples : ndarray
        Field samples at :func:`grid_points`, along the last axis.

    Examples
    --------
    The mode n=1 with unit coefficient samples exp(ix):

    >>> import numpy as np
    >>> samples = to_grid(np.array([0, 0, 1]), n_grid=8)
    >>> bool(np.allclose(samples, np.exp(1j * grid_points(8))))
    True
    """

    coeffs = as_coeffs(coeffs)
    k = get_k(coeffs)
    n_grid = grid_size(k) if n_grid is None else int(n_grid)

    if n_grid < 2 * k + 1:
        raise ValueError('The grid must have at least 2k+1 points.')

    padded = np.zeros(coeffs.shape[:-1] + (n_grid,), dtype=complex)
    padded[..., get_modes(k) % n_grid] = coeffs

    return n_grid * np.fft.ifft(padded, axis=-1)


def to_spectrum(samples, k):
    """Project grid samples onto the coefficients of modes -k ... k.

    Parameters
    ----------
    samples : ndarray
        Field samples on the equispaced grid, along the last axis.
    k : int
        Mode cut-off of the returned coefficients.

    Returns
    -------
    coeffs : ndarray
        Coefficients c(n) = (1/2pi) int u(x) exp(-inx) dx, by the trapezoid rule.
    """

    samples = np.asarray(samples, dtype=complex)
    n_grid = samples.shape[-1]

    if n_grid < 2 * k + 1:
        raise ValueError('The grid must have at least 2k+1 points.')

    spectrum = np.fft.fft(samples, axis=-1) / n_grid

    return spectrum[..., get_modes(k) % n_grid]


def dispersion_phases(k, t):
    """Phase factors exp(+i t n^2) of the free flow, broadcast over the shape of t.

    Parameters
    ----------
    k : int
        Mode cut-off.
    t : float or ndarray
        Time(s). An array of times returns one row of phases per time.

    Returns
    -------
    phases : ndarray
        Array of shape ``np.shape(t) + (2k+1,)``.
    """

    modes = get_modes(k)

    return np.exp(1j * np.asarray(t, dtype=float)[..., None] * modes ** 2)


def basis_field(n, k):
    """Unit-norm free fixed point u0_n = exp(inx) / sqrt(2pi) as a coefficient array."""

    if abs(n) > k:
        raise ValueError('Mode {} is outside the cut-off k={}.'.format(n, k))

    coeffs = np.zeros(2 * k + 1, dtype=complex)
    coeffs[n + k] = 1 / np.sqrt(2 * np.pi)

    return coeffs


def random_fields(rng, k, n_fields=None, unit=True):
    """Draw random complex coefficient arrays, normalized to the unit sphere by default.

    Parameters
    ----------
    rng : numpy.random.Generator
        Source of randomness.
    k : int
        Mode cut-off.
    n_fields : int, optional
        Number of fields. If None, a single 1d array is returned.
    unit : bool, optional, default: True
        Whether to normalize each field to unit L2 norm.

    Returns
    -------
    fields : ndarray
        Complex coefficients, shape (2k+1,) or (n_fields, 2k+1).
    """

    shape = (2 * k + 1,) if n_fields is None else (n_fields, 2 * k + 1)
    fields = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)

    if unit:
        fields /= np.sqrt(2 * np.pi * np.sum(np.abs(fields) ** 2, axis=-1, keepdims=True))

    return fields


class FourierField:
    """Truncated complex spectrum of a field on the circle.

    Attributes
    ----------
    coeffs : 1d array
        Read-only coefficients c(n), ordered n = -k ... k.
    k : int
        Mode cut-off.

    Notes
    -----
    The convention is c(n) = (1/2pi) int u(x) exp(-inx) dx, so that u(x) = sum c(n) exp(inx)
    and the L2 norm is sqrt(2pi sum |c(n)|^2).
    """

    def __init__(self, coeffs):
        """Initialize from a coefficient array (copied)."""

        coeffs = np.array(coeffs, dtype=complex)

        if coeffs.ndim != 1:
            raise ValueError('A FourierField holds a single 1d coefficient array.')

        get_k(coeffs)
        coeffs.flags.writeable = False

        self._coeffs = coeffs


    def __repr__(self):

        return 'FourierField(k={}, norm={:.6g})'.format(self.k, self.norm())


    def __len__(self):

        return len(self._coeffs)


    def __getitem__(self, n):
        """Coefficient at frequency n, which is zero outside the cut-off."""

        return self._coeffs[n + self.k] if abs(n) <= self.k else 0j


    @property
    def coeffs(self):

        return self._coeffs


    @property
    def k(self):

        return get_k(self._coeffs)


    @property
    def modes(self):

        return get_modes(self.k)


    @classmethod
    def basis(cls, n, k):
        """The unit-norm field exp(inx) / sqrt(2pi)."""

        return cls(basis_field(n, k))


    def norm(self):
        """L2 norm of the field."""

        return float(np.sqrt(2 * np.pi * np.sum(np.abs(self._coeffs) ** 2)))


    def normalize(self):
        """Return the unit-norm representative of the field."""

        norm = self.norm()

        if norm == 0:
            raise ValueError('The zero field cannot be normalized.')

        return FourierField(self._coeffs / norm)


    def resize(self, k):
        """Return the field zero padded or truncated to mode cut-off k."""

        return FourierField(resize_coeffs(self._coeffs, k))


    def to_grid(self, n_grid=None):
        """Return the field sampled on the collocation grid."""

        n_grid = grid_size(self.k) if n_grid is None else n_grid

        return GridField(to_grid(self._coeffs, n_grid))


class GridField:
    """Field samples on N equispaced points of [0, 2pi).

    Attributes
    ----------
    samples : 1d array
        Read-only complex samples.
    n_grid : int
        Number of grid points.
    """

    def __init__(self, samples):
        """Initialize from samples (copied)."""

        samples = np.array(samples, dtype=complex)
        samples.flags.writeable = False

        self._samples = samples


    def __repr__(self):

        return 'GridField(n_grid={})'.format(self.n_grid)


    @property
    def samples(self):

        return self._samples


    @property
    def n_grid(self):

        return len(self._samples)


    @property
    def x(self):

        return grid_points(self.n_grid)


    def to_spectrum(self, k):
        """Return the FourierField of modes -k ... k."""

        return FourierField(to_spectrum(self._samples, k))


    def norm(self):
        """L2 norm by the trapezoid rule."""

        return float(np.sqrt(2 * np.pi * np.mean(np.abs(self._samples) ** 2)))
