"""Smoothed Hamiltonians, their gradients, and Hofer norm estimates."""

from .density import (DensityModel, ZeroDensity, LinearDensity, GrossPitaevskiiDensity,
                      TableDensity, create_density)
from .system import (HamiltonianSystem, eval_F, grad_F, hess_F, eval_G, grad_G, X_G,
                     eval_H0, grad_H0)
from .hofer import HoferEstimate, hofer_norm, hofer_gap
