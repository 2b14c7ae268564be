"""
1. Truncated flows and the Hofer norm
=====================================

Build a convolution-type Hamiltonian, integrate its flow and estimate its Hofer norm.

Fields on the circle are stored as Fourier coefficients on the modes -k, ..., k. The nonlinearity
only sees the field through its convolution with a kernel psi whose frequencies are admissible, so
the Hamiltonian is a small perturbation of the free Schroedinger flow whenever the kernel is small.
"""

####################################################################################################
#
# Kernels and systems
# -------------------
#
# An admissible kernel only has frequencies n with |n^2 - m^2| >= delta for all other supported
# m. The system pairs it with a density model, here a Gross-Pitaevskii density.

import numpy as np
import matplotlib.pyplot as plt

from convnls.spectral import make_admissible_kernel, basis_field, normalize, compute_norm
from convnls.hamiltonian import HamiltonianSystem, GrossPitaevskiiDensity, hofer_norm
from convnls.flow import FlowSpec, simulate, free_fixed_points
from convnls.plts import plot_hofer_certificate

####################################################################################################

k = 3
psi = make_admissible_kernel(0.5, k, amplitude=0.2)
system = HamiltonianSystem(psi, GrossPitaevskiiDensity(1., potential=0.05), k)

print(psi)
print(system)

####################################################################################################
#
# Integrating the flow
# --------------------
#
# The flow is integrated in the interaction picture, where the free rotation exp(i t n^2) has
# been factored out. The L2 norm is conserved, and its drift is tracked during integration.

spec = FlowSpec(system, dt=1e-2)

field = normalize(basis_field(0, k) + 0.3 * basis_field(1, k))
df_obs, final = simulate(spec, field, record_every=10)

print(df_obs.head())

####################################################################################################

fig, ax = plt.subplots(figsize=(8, 3))
ax.plot(df_obs['t'], df_obs['norm'] - df_obs['norm'].iloc[0])
ax.set(xlabel='t', ylabel='norm drift');

####################################################################################################
#
# Free fixed points
# -----------------
#
# Without a nonlinearity, the time-one map fixes each mode u0_n up to the phase exp(i n^2).

fields, multipliers, actions = free_fixed_points(k)

print(compute_norm(fields))
print(actions)

####################################################################################################
#
# Hofer norm
# ----------
#
# The Hofer norm is the time integral of the oscillation of G_t over the unit sphere. Each
# quadrature node reports its extrema, with convergence, in a certificate.

estimate = hofer_norm(system, 'G', n_nodes=4, n_starts=4)

print(estimate.value, estimate.converged)

####################################################################################################

plot_hofer_certificate(estimate.certificate)
