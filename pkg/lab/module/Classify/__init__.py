"""
中心判定模块
"""

from .CenterClassifier import (
    CLASSIFY_TOL,
    CenterClass,
    classify_canonical,
    classify_complex,
    complex_to_canonical,
    complex_to_real_field,
)
from .SingularityLayout import (
    Equilibrium,
    SingularityLayout,
    jacobian_kind,
    lv_one_zero_kind,
    singularity_layout,
)
from .IntegratingFactor import (
    canonical_factor,
    canonical_field,
    complex_factor,
    verify_integrating_factor,
)

__all__ = [
    'CLASSIFY_TOL',
    'CenterClass',
    'classify_canonical',
    'classify_complex',
    'complex_to_canonical',
    'complex_to_real_field',
    'Equilibrium',
    'SingularityLayout',
    'jacobian_kind',
    'lv_one_zero_kind',
    'singularity_layout',
    'canonical_factor',
    'canonical_field',
    'complex_factor',
    'verify_integrating_factor',
]
