"""
ODE 仿真与回归映射模块
"""

from .Integrator import Trajectory, escape_radius, integrate
from .ReturnMap import (
    CycleReport,
    center_region,
    displacement,
    level_change,
    locate_cycle,
    return_map,
    section_side,
)

__all__ = [
    'Trajectory',
    'escape_radius',
    'integrate',
    'CycleReport',
    'center_region',
    'displacement',
    'level_change',
    'locate_cycle',
    'return_map',
    'section_side',
]
