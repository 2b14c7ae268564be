"""Residual of the perturbed Cauchy-Riemann equation on a strip, and its linearization."""

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import LinearOperator

from convnls.spectral.fields import dispersion_phases
from convnls.spectral.norms import inner_real, tangent_projection
from convnls.hamiltonian.system import grad_F, hess_F, grad_H0

###################################################################################################
###################################################################################################

def diff_s(n_s, ds):
    """Central differences in s, one-sided at the two boundary columns."""

    oper = sparse.diags([-0.5, 0.5], [-1, 1], shape=(n_s, n_s), format='lil')
    oper[0, :2] = [-1., 1.]
    oper[n_s - 1, n_s - 2:] = [-1., 1.]

    return oper.tocsr() / ds


def diff_t(n_t, dt):
    """Periodic central differences in t."""

    oper = sparse.diags([-0.5, 0.5], [-1, 1], shape=(n_t, n_t), format='lil')
    oper[0, n_t - 1] = -0.5
    oper[n_t - 1, 0] = 0.5

    return oper.tocsr() / dt


def apply_along(oper, values, axis):
    """Apply a sparse matrix along one axis of an array."""

    moved = np.moveaxis(values, axis, 0)
    out = oper @ moved.reshape(moved.shape[0], -1)

    return np.moveaxis(out.reshape(moved.shape), 0, axis)


class StripOperator:
    """Co-moving form of the strip equation for one system and strip geometry.

    In the co-moving frame w = phi0_{-t} u the equation reads

        Pi_w (D_s w + i D_t w - grad H0(w) + phi_T(s) grad F_t(w)) = 0,

    which is phi0_{-t} applied to Pi_u (D_s u + i D_t u + phi_T(s) grad G_t(u)).

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    grid : StripGrid
        Strip providing the geometry and cut-off.
    """

    def __init__(self, system, grid):

        if grid.k != system.k:
            raise ValueError('Strip cut-off {} does not match the system k={}.'.format(
                grid.k, system.k))

        self.system = system
        self.shape = grid.values.shape
        self.ds, self.dt = grid.ds, grid.dt
        self.s, self.t = grid.s, grid.t
        self.phi = grid.cutoff
        self.oper_s = diff_s(grid.n_s, grid.ds)
        self.oper_t = diff_t(grid.n_t, grid.dt)


    def derivatives(self, comoving):
        """Return D_s w and D_t w."""

        return apply_along(self.oper_s, comoving, 0), apply_along(self.oper_t, comoving, 1)


    def gradient(self, comoving):
        """Return grad F_t(w) at every node, with t broadcast along the rows."""

        if self.system.is_free:
            return np.zeros_like(comoving)

        return grad_F(self.system, comoving, self.t[None, :])


    def unprojected(self, comoving):
        """Q = D_s w + i D_t w - grad H0(w) + phi grad F_t(w) at every node."""

        d_s, d_t = self.derivatives(comoving)

        return (d_s + 1j * d_t - grad_H0(comoving) +
                self.phi[:, None, None] * self.gradient(comoving))


    def residual(self, comoving):
        """Projected residual on the interior columns, and the unprojected Q on all nodes."""

        unproj = self.unprojected(comoving)
        res = tangent_projection(comoving, unproj)[1:-1]

        return res, unproj


    def norm(self, res):
        """Discrete L2 norm of interior node values."""

        return float(np.sqrt(np.sum(inner_real(res, res)) * self.ds * self.dt))


    def linearize(self, comoving, unproj):
        """Gauss-Newton linearization as a real LinearOperator on interior nodes.

        Parameters
        ----------
        comoving : 3d array
            Current co-moving strip, with unit nodes.
        unproj : 3d array
            Unprojected residual Q at the same strip.

        Returns
        -------
        oper : scipy.sparse.linalg.LinearOperator
            Map from horizontal updates V on the interior columns to the change of the
            projected residual, Pi_w dQ[V] - <Q, w> V - <Q, iw> iV, with its transpose.
        """

        interior = (self.shape[0] - 2,) + self.shape[1:]
        size = 2 * int(np.prod(interior))

        coef_a = inner_real(unproj, comoving)[..., None]
        coef_b = inner_real(unproj, 1j * comoving)[..., None]
        phi = self.phi[:, None, None]

        def embed(vec):
            full = np.zeros(self.shape, dtype=complex)
            full[1:-1] = as_complex_array(vec, interior)
            return tangent_projection(comoving, full)

        def hess(vals):
            if self.system.is_free:
                return np.zeros_like(vals)
            return hess_F(self.system, comoving, vals, self.t[None, :])

        def matvec(vec):
            upd = embed(vec)
            d_s, d_t = self.derivatives(upd)
            change = d_s + 1j * d_t - grad_H0(upd) + phi * hess(upd)
            out = tangent_projection(comoving, change) - coef_a * upd - coef_b * (1j * upd)
            return as_real_vector(out[1:-1])

        def rmatvec(vec):
            res = embed(vec)
            back = (apply_along(self.oper_s.T, res, 0) +
                    apply_along(self.oper_t.T, -1j * res, 1) -
                    grad_H0(res) + hess(phi * res))
            out = tangent_projection(comoving, tangent_projection(comoving, back) -
                                     coef_a * res + coef_b * (1j * res))
            return as_real_vector(out[1:-1])

        return LinearOperator((size, size), matvec=matvec, rmatvec=rmatvec, dtype=float)


def as_real_vector(values):
    """Flatten complex node values into a real vector of interleaved parts."""

    return np.ascontiguousarray(values).view(np.float64).ravel()


def as_complex_array(vec, shape):
    """Inverse of :func:`as_real_vector`."""

    return np.ascontiguousarray(vec, dtype=np.float64).view(np.complex128).reshape(shape)


def residual(system, grid):
    """Residual Pi_u (D_s u + i D_t u + phi_T(s) grad G_t(u)) of a strip.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    grid : StripGrid
        Strip to evaluate.

    Returns
    -------
    res : 3d array
        Residual tangent vectors at the interior nodes, of shape (n_s - 2, n_t, 2k+1).
    res_norm : float
        Discrete L2 norm of the residual.

    Notes
    -----
    Derivatives use central differences, one-sided at the boundary columns in s and
    periodic in the co-moving frame in t, which encodes the twisted boundary condition.
    """

    oper = StripOperator(system, grid)
    res, _ = oper.residual(grid.comoving())

    res = res * dispersion_phases(grid.k, grid.t)[None, :, :]

    return res, oper.norm(res)
