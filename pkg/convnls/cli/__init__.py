"""Configuration, experiments and the verify suite behind the command line interface."""

from .config import (RunConfig, DEFAULTS, load_config, build_kernel, build_density, build_system,
                     build_flow_spec, build_schedule, continuation_kwargs)
from .experiments import run_experiment
from .verify import run_verify, summarize
from .main import main
