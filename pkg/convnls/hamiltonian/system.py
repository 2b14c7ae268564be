"""Smoothed interaction Hamiltonians, their gradients and Hamiltonian vector fields."""

import numpy as np

from convnls.spectral.fields import (as_coeffs, get_k, get_modes, grid_size, grid_points,
                                     to_grid, to_spectrum, dispersion_phases)
from convnls.spectral.kernels import Kernel, truncate_kernel
from convnls.spectral.norms import compute_norm
from convnls.hamiltonian.density import DensityModel

###################################################################################################
###################################################################################################

HESS_STEP = 1e-6


class HamiltonianSystem:
    """A smoothed Hamiltonian F_t(u) = 1/2 int f(|u * psi_k|^2, x, t) dx on modes -k ... k.

    Parameters
    ----------
    psi : Kernel
        Admissible convolution kernel.
    density : DensityModel
        Nonlinear density f.
    k : int
        Mode cut-off of the field space.
    kernel_modes : int, optional
        Cut-off of the kernel truncation. Defaults to k.
    n_grid : int, optional
        Number of collocation points. Defaults to :func:`~.grid_size` of k.

    Attributes
    ----------
    multiplier : 1d array
        Coefficients of the truncated kernel on modes -k ... k.
    x : 1d array
        Collocation points.
    """

    def __init__(self, psi, density, k, kernel_modes=None, n_grid=None):

        if not isinstance(psi, Kernel):
            raise TypeError('The kernel must be a Kernel instance.')

        if not isinstance(density, DensityModel):
            raise TypeError('The density must be a DensityModel instance.')

        if k < 0:
            raise ValueError('The mode cut-off k must be non-negative.')

        self.psi = psi
        self.density = density
        self.k = int(k)
        self.kernel_modes = self.k if kernel_modes is None else min(int(kernel_modes), self.k)
        self.n_grid = grid_size(self.k) if n_grid is None else int(n_grid)

        self.multiplier = truncate_kernel(psi, self.kernel_modes).multiplier(self.k)
        self.x = grid_points(self.n_grid)


    def __repr__(self):

        return 'HamiltonianSystem(k={}, kernel_modes={}, density={})'.format(
            self.k, self.kernel_modes, self.density.kind)


    @property
    def modes(self):

        return get_modes(self.k)


    @property
    def is_free(self):
        """Whether the interaction vanishes, so the flow is the free flow."""

        return self.density.is_zero or not np.any(self.multiplier)


    def with_kernel_modes(self, kernel_modes):
        """Return the system on the same field space with a different kernel truncation."""

        return HamiltonianSystem(self.psi, self.density, self.k, kernel_modes, self.n_grid)


    def smoothed(self, field):
        """Grid samples of w = u * psi_k."""

        coeffs = as_coeffs(field)
        self._check_modes(coeffs)

        return to_grid(2 * np.pi * self.multiplier * coeffs, self.n_grid)


    def _check_modes(self, coeffs):

        if get_k(coeffs) != self.k:
            raise ValueError('Field has cut-off {}, the system has k={}.'.format(
                get_k(coeffs), self.k))


def _times(t):
    """Times broadcast against samples with a trailing grid axis."""

    return np.asarray(t, dtype=float)[..., None]


def eval_F(system, field, t):
    """Evaluate F_t(u) = 1/2 int f(|w|^2, x, t) dx with w = u * psi_k.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    field : ndarray or FourierField
        Field coefficients, with leading axes batched.
    t : float or ndarray
        Time(s), broadcast against the leading axes of the field.

    Returns
    -------
    value : float or ndarray
        Hamiltonian value(s), computed by the trapezoid rule on the collocation grid.
    """

    smoothed = system.smoothed(field)
    dens = system.density.f(np.abs(smoothed) ** 2, system.x, _times(t))

    return 0.5 * np.mean(dens, axis=-1) * 2 * np.pi


def grad_F(system, field, t):
    """L2 gradient of F_t, with coefficients 2pi h(n) conj(psi_k(n)).

    Here h(n) are the coefficients of d1f(|w|^2, x, t) w, so the result is the exact gradient
    of the discretized Hamiltonian computed by :func:`eval_F`.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    field : ndarray or FourierField
        Field coefficients, with leading axes batched.
    t : float or ndarray
        Time(s), broadcast against the leading axes of the field.

    Returns
    -------
    grad : ndarray
        Gradient coefficients, of the same shape as the field.
    """

    smoothed = system.smoothed(field)
    weight = system.density.d1f(np.abs(smoothed) ** 2, system.x, _times(t))
    spectrum = to_spectrum(weight * smoothed, system.k)

    return 2 * np.pi * np.conj(system.multiplier) * spectrum


def hess_F(system, field, direction, t, step=HESS_STEP):
    """Directional second derivative of F_t, by central differences of the gradient.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    field, direction : ndarray
        Base point(s) and direction(s), broadcastable against each other.
    t : float or ndarray
        Time(s).
    step : float, optional, default: 1e-6
        Difference step, relative to the norm of each direction.

    Returns
    -------
    hess : ndarray
        Hessian applied to the direction(s). Zero directions map to zero.
    """

    field, direction = np.broadcast_arrays(as_coeffs(field), as_coeffs(direction))

    norms = compute_norm(direction)
    scale = np.where(norms > 0, step / np.where(norms > 0, norms, 1.), 0.)[..., None]

    forward = grad_F(system, field + scale * direction, t)
    backward = grad_F(system, field - scale * direction, t)

    return np.where(scale > 0, (forward - backward) / np.where(scale > 0, 2 * scale, 1.), 0.)


def eval_G(system, field, t):
    """Evaluate G_t(u) = F_t(phi0_{-t} u), the Hamiltonian in the interaction picture."""

    coeffs = as_coeffs(field)

    return eval_F(system, coeffs * dispersion_phases(system.k, -np.asarray(t, dtype=float)), t)


def grad_G(system, field, t):
    """L2 gradient of G_t, equal to phi0_t grad F_t(phi0_{-t} u)."""

    coeffs = as_coeffs(field)
    phases = dispersion_phases(system.k, t)

    return phases * grad_F(system, coeffs * np.conj(phases), t)


def X_G(system, field, t):
    """Hamiltonian vector field X^G_t = i grad G_t."""

    return 1j * grad_G(system, field, t)


def eval_H0(field):
    """Free Hamiltonian H0(u) = 1/2 int |u_x|^2 dx = pi sum n^2 |u(n)|^2."""

    coeffs = as_coeffs(field)
    modes = get_modes(get_k(coeffs))

    return np.pi * np.sum(modes ** 2 * np.abs(coeffs) ** 2, axis=-1)


def grad_H0(field):
    """L2 gradient of H0, with coefficients n^2 u(n)."""

    coeffs = as_coeffs(field)

    return get_modes(get_k(coeffs)) ** 2 * coeffs
