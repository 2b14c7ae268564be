"""Checker functions."""

# This alias function from NeuroDSP
from neurodsp.utils.checks import check_param_range, check_param_options
