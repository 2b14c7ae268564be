"""Objects."""

from .fit import Strips, FixedPoints
