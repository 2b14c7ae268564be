"""Smooth cut-off functions in the strip coordinate s."""

import numpy as np

###################################################################################################
###################################################################################################

def smooth_step(x):
    """C-infinity step from 0 at x <= 0 to 1 at x >= 1, built from exp(-1/x) transitions.

    Parameters
    ----------
    x : float or ndarray
        Evaluation points.

    Returns
    -------
    step : float or ndarray
        Values in [0, 1], nondecreasing in x.
    """

    x = np.asarray(x, dtype=float)

    with np.errstate(divide='ignore', over='ignore'):
        left = np.where(x > 0, np.exp(-1 / np.where(x > 0, x, 1.)), 0.)
        right = np.where(x < 1, np.exp(-1 / np.where(x < 1, 1 - x, 1.)), 0.)

    return left / (left + right)


class CutoffFamily:
    """Compactly supported cut-off phi_T, equal to one on [-T, T] and zero past T_hat.

    Parameters
    ----------
    T : float
        Non-negative cut-off parameter. For T = 0 the cut-off vanishes identically.

    Attributes
    ----------
    T_hat : float
        Support bound min(2T, T + 1).

    Examples
    --------
    >>> phi = CutoffFamily(2.)
    >>> phi([0., 2., 3.]).tolist()
    [1.0, 1.0, 0.0]
    """

    def __init__(self, T):

        if T < 0:
            raise ValueError('The cut-off parameter T must be non-negative.')

        self.T = float(T)
        self.T_hat = min(2 * self.T, self.T + 1)


    def __repr__(self):

        return 'CutoffFamily(T={}, T_hat={})'.format(self.T, self.T_hat)


    def __call__(self, s):

        s = np.asarray(s, dtype=float)

        if self.T == 0:
            return np.zeros(s.shape)

        return smooth_step((self.T_hat - np.abs(s)) / (self.T_hat - self.T))


def cutoff(T, s):
    """Evaluate phi_T(s)."""

    return CutoffFamily(T)(s)


def cutoff_one_sided(s):
    """One-sided cut-off, equal to 0 for s <= -1 and 1 for s >= 0."""

    return smooth_step(np.asarray(s, dtype=float) + 1)


def shift_profile(T, s):
    """Express phi_T near its left transition as the one-sided cut-off in shifted coordinates.

    Parameters
    ----------
    T : float
        Cut-off parameter, with T >= 1 so that the transition has unit width.
    s : float or ndarray
        Strip coordinates.

    Returns
    -------
    shifted : ndarray
        Values of cutoff_one_sided(s + T), which agree with phi_T(s) for s <= 0.
    """

    if T < 1:
        raise ValueError('Shifted profiles need T >= 1.')

    return cutoff_one_sided(np.asarray(s, dtype=float) + T)
