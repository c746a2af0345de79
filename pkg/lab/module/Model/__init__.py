"""
领域模型模块
"""

from .params import (
    DEGENERACY_TOL,
    CanonicalQuadratic,
    ComplexFormParams,
    CriticalLevels,
    LevelSet,
    Perturbation,
    Region,
    ReversibleParams,
    validate_reversible,
)

__all__ = [
    'DEGENERACY_TOL',
    'CanonicalQuadratic',
    'ComplexFormParams',
    'CriticalLevels',
    'LevelSet',
    'Perturbation',
    'Region',
    'ReversibleParams',
    'validate_reversible',
]
