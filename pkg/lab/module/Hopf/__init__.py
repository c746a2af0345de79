"""
Hopf 展开与小极限环分布模块
"""

from .MuCoefficients import (
    MuCoefficients,
    first_nonzero,
    mu00_reduced_02,
    mu01_reduced,
    mu02_reduced,
    mu03_reduced,
    mu10_reduced_20,
    mu11_reduced,
    mu12_reduced,
    mu_coefficients,
    mu_exact,
    on_line03,
    on_line30,
    shared_factor,
)
from .HopfSolver import (
    ACHIEVABLE,
    Distribution,
    distribution,
    solve_a4_zero_mu02,
    solve_a4_zero_mu12,
    solve_b01_zero_mu00,
    solve_b11_zero_mu01,
    solve_chain_right,
    solve_one_one,
)

__all__ = [
    'MuCoefficients',
    'first_nonzero',
    'mu00_reduced_02',
    'mu01_reduced',
    'mu02_reduced',
    'mu03_reduced',
    'mu10_reduced_20',
    'mu11_reduced',
    'mu12_reduced',
    'mu_coefficients',
    'mu_exact',
    'on_line03',
    'on_line30',
    'shared_factor',
    'ACHIEVABLE',
    'Distribution',
    'distribution',
    'solve_a4_zero_mu02',
    'solve_a4_zero_mu12',
    'solve_b01_zero_mu00',
    'solve_b11_zero_mu01',
    'solve_chain_right',
    'solve_one_one',
]
