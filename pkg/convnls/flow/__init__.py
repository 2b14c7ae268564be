"""Free, interaction-picture and full flows."""

from .free import free_flow, free_fixed_points
from .integrate import FlowSpec, flow_G, time_one_map, tangent_time_one, simulate
