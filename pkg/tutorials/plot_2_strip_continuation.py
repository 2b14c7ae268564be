"""
2. Strips and fixed points
==========================

Continue a Floer strip from a free fixed point and refine the fixed point it carries.

The constant strip at the free fixed point u0_n solves the Cauchy-Riemann equation when the
Hamiltonian perturbation is switched off. The cut-off parameter T is then increased, solving the
perturbed equation at each step, and the slice of the strip that is closest to a fixed point is
refined with Newton's method.
"""

####################################################################################################

from convnls.spectral import make_admissible_kernel
from convnls.hamiltonian import HamiltonianSystem, GrossPitaevskiiDensity
from convnls.flow import FlowSpec
from convnls.fixedpoint import refine_newton
from convnls import Strips, FixedPoints

####################################################################################################

k = 2
psi = make_admissible_kernel(0.5, k, amplitude=0.2)
system = HamiltonianSystem(psi, GrossPitaevskiiDensity(1.), k)

####################################################################################################
#
# Continuing a strip
# ------------------
#
# Each accepted step is logged with its residual, energy and the smallest fixed point defect
# along the strip.

strips = Strips([0., 0.5, 1.], n_s=24, n_t=8, margin=2.)
strips.fit(system, 1, hofer=0.1)

print(strips.log)

####################################################################################################

strips.plot()

####################################################################################################
#
# Refining the candidate
# ----------------------
#
# The slice with the smallest defect is the starting point of a Newton iteration on the time-one
# map, modulo the global phase.

candidate = strips.extract()

spec = FlowSpec(system, dt=1e-2)
record = refine_newton(spec, candidate)

print(record)

####################################################################################################
#
# Catalogs over modes
# -------------------
#
# A catalog runs the same pipeline for several modes and labels fixed points that coincide.

fixed_points = FixedPoints([0., 0.5, 1.],
                           continuation_kwargs={'n_s': 24, 'n_t': 8, 'margin': 2.,
                                                'hofer_kwargs': {'n_nodes': 2, 'n_starts': 2}})
fixed_points.fit(spec, [0, 1], n_jobs=1)

fixed_points.plot()
