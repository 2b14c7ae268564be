"""Admissible convolution kernels, truncation, and convolution in Fourier space."""

import numpy as np
import pandas as pd

from convnls.utils.checks import check_param_options
from convnls.spectral.fields import FourierField, as_coeffs, get_k, get_modes, resize_coeffs

###################################################################################################
###################################################################################################

# Frequencies past this bound lose the accuracy of sin(m^2 / 2) in double precision
MAX_ADMISSIBLE_MODE = 10 ** 6
HERMITIAN_TOL = 1e-14


def admissible_frequencies(delta, k):
    """Frequencies m with |m| <= k whose free-flow gap 2|sin(m^2 / 2)| is at least delta.

    Parameters
    ----------
    delta : float
        Gap threshold, in the open interval (0, 2).
    k : int
        Largest frequency considered.

    Returns
    -------
    freqs : 1d array of int
        The admissible frequencies, sorted.

    Notes
    -----
    The gap 2|sin(m^2 / 2)| is the distance |exp(im^2) - 1| between the free time-one
    multiplier of u0_m and one. The frequency 0 is never admissible.

    Examples
    --------
    >>> admissible_frequencies(0.1, 3).tolist()
    [-3, -2, -1, 1, 2, 3]
    """

    if not 0 < delta < 2:
        raise ValueError('The gap threshold delta must lie in the open interval (0, 2).')

    if k > MAX_ADMISSIBLE_MODE:
        raise ValueError('Frequencies beyond {} are not supported.'.format(MAX_ADMISSIBLE_MODE))

    modes = get_modes(k)
    gaps = compute_gaps(modes)

    return modes[gaps >= delta]


def compute_gaps(modes):
    """Free-flow gaps 2|sin(m^2 / 2)| of integer frequencies."""

    modes = np.asarray(modes, dtype=float)

    return 2 * np.abs(np.sin(modes ** 2 / 2))


class Kernel:
    """Real, admissible convolution kernel given by its Fourier coefficients.

    Parameters
    ----------
    coeffs : 1d array
        Coefficients psi(n), ordered n = -k ... k. Must be Hermitian, psi(-n) = conj(psi(n)).
    delta : float, optional
        Gap threshold certifying admissibility. If None, the largest threshold for which the
        support of the coefficients is admissible is used.

    Attributes
    ----------
    coeffs : 1d array
        Read-only coefficients.
    delta : float
        Gap threshold.
    allowed : frozenset of int
        Admissible frequencies with |m| <= k at this threshold.
    support : 1d array of int
        Frequencies with nonzero coefficient.
    """

    def __init__(self, coeffs, delta=None):
        """Initialize and validate the kernel."""

        coeffs = np.array(coeffs, dtype=complex)

        if coeffs.ndim != 1:
            raise ValueError('Kernel coefficients must be a 1d array.')

        k = get_k(coeffs)
        modes = get_modes(k)

        mismatch = np.max(np.abs(coeffs[::-1] - np.conj(coeffs)), initial=0.)
        scale = max(1., np.max(np.abs(coeffs), initial=0.))
        if mismatch > HERMITIAN_TOL * scale:
            raise ValueError('Kernel coefficients must satisfy psi(-n) = conj(psi(n)).')

        support = modes[coeffs != 0]

        if delta is None:
            if len(support) == 0:
                raise ValueError('A zero kernel has no gap threshold, pass delta explicitly.')
            delta = min(float(np.min(compute_gaps(support))), np.nextafter(2., 0.))

        allowed = admissible_frequencies(delta, k)
        outside = np.setdiff1d(support, allowed)
        if len(outside) > 0:
            raise ValueError('Kernel has nonzero coefficients at frequencies {} which are '
                             'not admissible at delta={}.'.format(outside.tolist(), delta))

        coeffs.flags.writeable = False

        self._coeffs = coeffs
        self.delta = float(delta)
        self.allowed = frozenset(int(freq) for freq in allowed)


    def __repr__(self):

        return 'Kernel(k={}, delta={:.4g}, support={})'.format(
            self.k, self.delta, self.support.tolist())


    def __getitem__(self, n):

        return self._coeffs[n + self.k] if abs(n) <= self.k else 0j


    @property
    def coeffs(self):

        return self._coeffs


    @property
    def k(self):

        return get_k(self._coeffs)


    @property
    def support(self):

        return get_modes(self.k)[self._coeffs != 0]


    def multiplier(self, k):
        """Coefficients of the kernel resized to mode cut-off k."""

        return resize_coeffs(self._coeffs, k)


    def to_grid(self, n_grid=None):
        """Real samples of the kernel on the collocation grid."""

        return FourierField(self._coeffs).to_grid(n_grid).samples.real


def make_admissible_kernel(delta, k, profile='geometric', amplitude=1., decay=0.5):
    """Build a real, even kernel supported on the admissible frequencies.

    Parameters
    ----------
    delta : float
        Gap threshold, in the open interval (0, 2).
    k : int
        Mode cut-off of the kernel.
    profile : {'geometric', 'constant'} or callable, optional, default: 'geometric'
        Decay profile of the coefficient magnitude with |m|. A callable receives the array of
        admissible frequencies and returns non-negative amplitudes.
    amplitude : float, optional, default: 1.
        Coefficient magnitude at |m| = 0, before decay.
    decay : float, optional, default: 0.5
        Ratio between successive magnitudes, for the 'geometric' profile.

    Returns
    -------
    psi : Kernel
        Kernel with psi(m) = amplitude * decay ** |m| on admissible m, and zero elsewhere.

    Raises
    ------
    ValueError
        If no frequency |m| <= k is admissible.

    Examples
    --------
    >>> psi = make_admissible_kernel(0.5, 3, amplitude=1., decay=0.5)
    >>> psi.support.tolist()
    [-3, -2, -1, 1, 2, 3]
    """

    allowed = admissible_frequencies(delta, k)

    if len(allowed) == 0:
        raise ValueError('No admissible frequencies at this k.')

    if callable(profile):
        magnitudes = np.asarray(profile(allowed), dtype=float)
    else:
        check_param_options(profile, 'profile', ['geometric', 'constant'])
        magnitudes = amplitude * (decay ** np.abs(allowed) if profile == 'geometric' \
            else np.ones(len(allowed)))

    if np.any(magnitudes < 0):
        raise ValueError('Kernel profile amplitudes must be non-negative.')

    coeffs = np.zeros(2 * k + 1, dtype=complex)
    coeffs[allowed + k] = magnitudes

    # Even in n, so the kernel is real
    coeffs = 0.5 * (coeffs + coeffs[::-1])

    return Kernel(coeffs, delta)


def truncate_kernel(psi, k):
    """Return the kernel with coefficients of |n| > k set to zero.

    Parameters
    ----------
    psi : Kernel
        Kernel to truncate.
    k : int
        Frequency cut-off.

    Returns
    -------
    psi_k : Kernel
        Truncated kernel, with the same threshold and coefficient length.
    """

    coeffs = np.array(psi.coeffs)
    coeffs[np.abs(get_modes(psi.k)) > k] = 0

    return Kernel(coeffs, psi.delta)


def truncation_error_bound(psi, k):
    """L2 norm of the kernel tail, sqrt(2pi sum_{|n|>k} |psi(n)|^2).

    Notes
    -----
    For unit fields u, sup_x |(u * psi)(x) - (u * psi_k)(x)| is bounded by this value, by
    Cauchy-Schwarz applied to the tail of the convolution.
    """

    tail = np.abs(get_modes(psi.k)) > k

    return float(np.sqrt(2 * np.pi * np.sum(np.abs(psi.coeffs[tail]) ** 2)))


def truncation_ladder(psi, ks):
    """Tabulate the truncation error bound over a sequence of cut-offs.

    Parameters
    ----------
    psi : Kernel
        Kernel to truncate.
    ks : list of int
        Cut-offs.

    Returns
    -------
    df_ladder : pandas.DataFrame
        Columns 'k' and 'bound'.
    """

    return pd.DataFrame({'k': [int(k) for k in ks],
                         'bound': [truncation_error_bound(psi, k) for k in ks]})


def convolve(field, psi):
    """Convolution with a kernel, (u * psi)(n) = 2pi u(n) psi(n).

    Parameters
    ----------
    field : ndarray or FourierField
        Field coefficients, with leading axes batched.
    psi : Kernel
        Convolution kernel. Frequencies past the field cut-off are dropped.

    Returns
    -------
    conv : ndarray or FourierField
        Convolved field, of the same type and cut-off as the input.
    """

    coeffs = as_coeffs(field)
    conv = 2 * np.pi * coeffs * psi.multiplier(get_k(coeffs))

    return FourierField(conv) if isinstance(field, FourierField) else conv
