"""Group computations across asymptotic modes."""

from .fixedpoints import compute_fixed_points
