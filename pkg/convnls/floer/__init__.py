"""Strips solving the perturbed Cauchy-Riemann equation, and their continuation in T."""

from .cutoff import CutoffFamily, cutoff, cutoff_one_sided, shift_profile, smooth_step
from .grid import StripGrid, constant_strip, strip_half_width
from .residual import StripOperator, residual
from .solver import solve_strip, align_columns
from .functionals import (energy, energy_density, energy_identity, slice_defect, best_slice,
                          action_profile, action_window, split_energy, normal_split)
from .continuation import ContinuationState, continue_in_T, check_schedule
from .snapshots import save_snapshot, load_snapshot, snapshot_to_json, snapshot_from_json
