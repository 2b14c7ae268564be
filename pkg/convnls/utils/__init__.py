"""Utility functions."""

from .errors import (ConfigError, SnapshotError, NumericalError, IntegratorStepError,
                     StripSolveError, ContinuationError, NewtonError)
from .rng import get_rng
from .progress import progress_bar
from .dataframes import write_csv, limit_df
