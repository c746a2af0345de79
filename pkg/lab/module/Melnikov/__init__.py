"""
Melnikov 函数模块
"""

from .AbelianIntegral import (
    AbelianTriple,
    abelian_integrals,
    brute_force_integrals,
    level_at,
    melnikov,
    melnikov_normalized,
)
from .ZeroFinder import (
    MelnikovSample,
    ZeroBracket,
    ZeroResult,
    brackets,
    find_zero,
    scan,
    scan_grid,
    zeros,
)
from .ExpansionFit import fit_expansion

__all__ = [
    'AbelianTriple',
    'abelian_integrals',
    'brute_force_integrals',
    'level_at',
    'melnikov',
    'melnikov_normalized',
    'MelnikovSample',
    'ZeroBracket',
    'ZeroResult',
    'brackets',
    'find_zero',
    'scan',
    'scan_grid',
    'zeros',
    'fit_expansion',
]
