"""convnls: fixed points of convolution-type nonlinear Schroedinger equations on the circle."""

from .version import __version__
from .objs import Strips, FixedPoints
