"""
可积系统模块
"""

from module.Model import CriticalLevels
from .FirstIntegral import (
    TurningPoints,
    critical_levels,
    first_integral,
    gamma,
    hamiltonian_field,
    radicand,
    section_abscissa,
    turning_points,
    vector_field,
    y_plus,
)
from .OtherIntegrals import (
    first_integral_hamiltonian,
    first_integral_lv,
    first_integral_q4,
    lv_discriminant,
    lv_g,
    q4_g,
    vector_field_hamiltonian,
    vector_field_lv,
    vector_field_q4,
)

__all__ = [
    'CriticalLevels',
    'TurningPoints',
    'critical_levels',
    'first_integral',
    'gamma',
    'hamiltonian_field',
    'radicand',
    'section_abscissa',
    'turning_points',
    'vector_field',
    'y_plus',
    'first_integral_hamiltonian',
    'first_integral_lv',
    'first_integral_q4',
    'lv_discriminant',
    'lv_g',
    'q4_g',
    'vector_field_hamiltonian',
    'vector_field_lv',
    'vector_field_q4',
]
