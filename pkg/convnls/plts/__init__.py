"""Plotting."""

from .continuation import plot_continuation_log, plot_action_profiles, plot_continuation_summary
from .strips import plot_strip_modes, plot_node_norms
from .hofer import plot_hofer_certificate
from .fixedpoints import plot_catalog
