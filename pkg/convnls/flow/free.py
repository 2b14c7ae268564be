"""The free (linear Schroedinger) flow and its fixed points."""

import numpy as np

from convnls.spectral.fields import as_coeffs, get_k, get_modes, dispersion_phases, basis_field

###################################################################################################
###################################################################################################

def free_flow(field, t):
    """Apply the free flow phi0_t, multiplying each coefficient by exp(i t n^2).

    Parameters
    ----------
    field : ndarray or FourierField
        Field coefficients, with leading axes batched.
    t : float or ndarray
        Time(s), broadcast against the leading axes of the field.

    Returns
    -------
    flowed : ndarray
        Coefficients of phi0_t(u).

    Examples
    --------
    After one period, the mode n=3 picks up the phase exp(9i):

    >>> import numpy as np
    >>> from convnls.spectral import basis_field
    >>> flowed = free_flow(basis_field(3, 3), 1.)
    >>> bool(np.isclose(flowed[6] * np.sqrt(2 * np.pi), np.exp(9j)))
    True
    """

    coeffs = as_coeffs(field)

    return coeffs * dispersion_phases(get_k(coeffs), t)


def free_fixed_points(k):
    """Fixed points of the free time-one map on complex projective space.

    Parameters
    ----------
    k : int
        Mode cut-off.

    Returns
    -------
    fields : 2d array
        Unit fields u0_n = exp(inx) / sqrt(2pi), one row per n = -k ... k.
    multipliers : 1d array
        Multipliers exp(i n^2), with phi0_1(u0_n) = multiplier * u0_n.
    actions : 1d array
        Actions n^2 / 2.
    """

    modes = get_modes(k)

    fields = np.array([basis_field(mode, k) for mode in modes])
    multipliers = np.exp(1j * modes ** 2)
    actions = modes ** 2 / 2

    return fields, multipliers, actions
