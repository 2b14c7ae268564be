"""Energy, action, and slice defect functionals of discretized strips."""

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid, cumulative_trapezoid

from convnls.utils.dataframes import limit_df
from convnls.spectral.fields import get_modes
from convnls.spectral.norms import (compute_norm, inner_real, normalize, symplectic_form,
                                    tangent_projection)
from convnls.hamiltonian.system import eval_F, grad_H0
from convnls.floer.grid import StripGrid
from convnls.floer.residual import StripOperator, diff_s, apply_along

###################################################################################################
###################################################################################################

TUBE_RADIUS = 0.5


def _tangents(system, grid):
    """Projected tangents of a strip in the co-moving frame.

    Returns
    -------
    d_s : 3d array
        Pi D_s u.
    d_t : 3d array
        Pi D_t u.
    flow : 3d array
        Pi X^G_t(u), the Hamiltonian vector field without cut-off.
    comoving : 3d array
        Co-moving strip values.
    """

    oper = StripOperator(system, grid)
    comoving = grid.comoving()

    d_s, d_t = oper.derivatives(comoving)
    d_t = d_t + 1j * grad_H0(comoving)
    flow = 1j * oper.gradient(comoving)

    return (tangent_projection(comoving, d_s), tangent_projection(comoving, d_t),
            tangent_projection(comoving, flow), comoving)


def _integrate(density, grid):
    """Trapezoid rule in s, periodic mean in t, of node values of shape (n_s, n_t)."""

    return float(trapezoid(np.mean(density, axis=1), x=grid.s))


def energy_density(system, grid):
    """Node values of 1/2 (|Pi D_s u|^2 + |Pi (D_t u - phi X^G_t(u))|^2)."""

    d_s, d_t, flow, _ = _tangents(system, grid)
    phi = grid.cutoff[:, None, None]

    return 0.5 * (inner_real(d_s, d_s) + inner_real(d_t - phi * flow, d_t - phi * flow))


def energy(system, grid):
    """Energy of a strip.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    grid : StripGrid
        Strip.

    Returns
    -------
    energy : float
        Quadrature of 1/2 (|Pi D_s u|^2 + |Pi (D_t u - phi_T X^G_t(u))|^2) over the strip.
    """

    return _integrate(energy_density(system, grid), grid)


def energy_identity(system, grid):
    """The integral -int int phi_T <grad G_t(u), D_s u> ds dt.

    On solutions with vanishing symplectic area this equals the energy.
    """

    d_s, _, flow, _ = _tangents(system, grid)
    phi = grid.cutoff[:, None]

    # flow is i grad, so <grad, d_s> = <-i flow, d_s>
    return -_integrate(phi * inner_real(-1j * flow, d_s), grid)


def _column(grid, s):

    if abs(s) > grid.T + grid.ds / 2:
        raise ValueError('Slices must lie where the cut-off is active, |s| <= T={}.'.format(
            grid.T))

    return int(np.argmin(np.abs(grid.s - s)))


def _defects(system, grid):

    _, d_t, flow, _ = _tangents(system, grid)

    return np.mean(inner_real(d_t - flow, d_t - flow), axis=1)


def slice_defect(system, grid, s):
    """Defect int_0^1 |Pi (D_t u - X^G_t(u))|^2 dt of the path at the column nearest to s.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    grid : StripGrid
        Strip.
    s : float
        Strip coordinate, with |s| <= T.

    Returns
    -------
    defect : float
        Defect of the slice as a Hamiltonian path.
    """

    return float(_defects(system, grid)[_column(grid, s)])


def best_slice(system, grid):
    """The slice with smallest defect among columns with |s| <= T.

    Returns
    -------
    s0 : float
        Coordinate of the best column. If no column lies in [-T, T], the column nearest to
        s = 0 is used.
    defect : float
        Its defect.
    """

    defects = _defects(system, grid)
    cols = np.flatnonzero(np.abs(grid.s) <= grid.T + 1e-12)

    if len(cols) == 0:
        cols = np.array([np.argmin(np.abs(grid.s))])

    best = cols[np.argmin(defects[cols])]

    return float(grid.s[best]), float(defects[best])


def action_profile(system, grid, orientation=-1):
    """Symplectic action of the paths t -> u(s, t), as a function of s.

    Parameters
    ----------
    system : HamiltonianSystem
        Hamiltonian system.
    grid : StripGrid
        Converged strip.
    orientation : {-1, 1}, optional, default: -1
        Sign of the symplectic area term.

    Returns
    -------
    df_action : pandas.DataFrame
        Columns 's' and 'action', with
        A(s) = n^2/2 + orientation * int_{-S}^{s} int omega(D_s u, D_t u) + phi_T(s) int G_t dt.
    """

    if orientation not in (-1, 1):
        raise ValueError('The orientation must be -1 or 1.')

    d_s, d_t, _, comoving = _tangents(system, grid)

    area = cumulative_trapezoid(np.mean(symplectic_form(d_s, d_t), axis=1), x=grid.s,
                                initial=0)

    if system.is_free:
        hamiltonian = np.zeros(grid.n_s)
    else:
        hamiltonian = grid.cutoff * np.mean(eval_F(system, comoving, grid.t[None, :]), axis=1)

    action = grid.n ** 2 / 2 + orientation * area + hamiltonian

    return pd.DataFrame({'s': grid.s, 'action': action})


def action_window(profile, T):
    """Rows of an action profile with |s| <= T.

    If no column lies in [-T, T], the row nearest to s = 0 is returned, as in :func:`best_slice`.
    """

    window = limit_df(profile, 's', -T - 1e-12, T + 1e-12)

    if window.empty:
        nearest = int(np.argmin(np.abs(profile['s'].values)))
        window = profile.iloc[[nearest]].reset_index(drop=True)

    return window


def split_energy(system, grid, l):
    """Split the energy into the parts of modes |m| <= l and |m| > l.

    Returns
    -------
    energy_tan, energy_nor : float
        Tangential and normal energies, summing to :func:`energy`.
    """

    d_s, d_t, flow, _ = _tangents(system, grid)
    mask = np.abs(get_modes(grid.k)) <= l
    d_tphi = d_t - grid.cutoff[:, None, None] * flow

    parts = []
    for sel in (mask, ~mask):
        dens = 0.5 * (inner_real(d_s * sel, d_s * sel) + inner_real(d_tphi * sel, d_tphi * sel))
        parts.append(_integrate(dens, grid))

    return tuple(parts)


def normal_split(grid, l, system=None):
    """Split a strip into its component in CP^{2l} and the normal part.

    Parameters
    ----------
    grid : StripGrid
        Strip, with every node within the tubular neighbourhood of CP^{2l}.
    l : int
        Mode cut-off of the tangential part, with l <= k.
    system : HamiltonianSystem, optional
        If given, the normal energy uses the full energy density. Otherwise it is the
        quadrature of |P_l Pi D_s u|^2, which equals it on solutions.

    Returns
    -------
    tangential : StripGrid
        Modes |m| <= l, renormalized at each node.
    normal : 3d array
        Coefficients of modes |m| > l at each node.
    normal_energy : float
        Energy of the normal part.

    Raises
    ------
    ValueError
        If a node has tangential norm below 0.5, naming the node.
    """

    if l > grid.k or l < 0:
        raise ValueError('The cut-off l must satisfy 0 <= l <= k.')

    mask = np.abs(get_modes(grid.k)) <= l
    tangential = grid.values * mask
    normal = grid.values * ~mask

    norms = compute_norm(tangential)
    if np.any(norms < TUBE_RADIUS):
        col, row = np.argwhere(norms < TUBE_RADIUS)[0]
        raise ValueError('Node (s={:.6g}, t={:.6g}) lies outside the tubular neighbourhood: '
                         'tangential norm {:.3g} < {}.'.format(grid.s[col], grid.t[row],
                                                              norms[col, row], TUBE_RADIUS))

    tan_grid = StripGrid(normalize(tangential), grid.S, grid.T, grid.n)

    if system is not None:
        normal_energy = split_energy(system, grid, l)[1]
    else:
        d_s = apply_along(diff_s(grid.n_s, grid.ds), grid.values, 0)
        d_s = tangent_projection(grid.values, d_s) * ~mask
        normal_energy = _integrate(inner_real(d_s, d_s), grid)

    return tan_grid, normal, normal_energy