"""Truncated spectral representation of fields and kernels."""

from .fields import (FourierField, GridField, to_grid, to_spectrum, grid_size, grid_points,
                     get_modes, basis_field, dispersion_phases, resize_coeffs)
from .kernels import (Kernel, admissible_frequencies, make_admissible_kernel, truncate_kernel,
                      truncation_error_bound, truncation_ladder, convolve)
from .norms import (compute_norm, inner_real, inner_complex, symplectic_form, normalize,
                    tangent_projection, projective_distance, align_phase)
from .io import field_to_json, field_from_json, kernel_to_json, kernel_from_json
