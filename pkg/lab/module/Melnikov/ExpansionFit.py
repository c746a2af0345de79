# -*- coding: utf-8 -*-
"""
临界值附近 M(h) 的多项式拟合

M(h) = Σ_{j>=0} μ_ij δ^(j+1)，δ = h - h00（左侧）或 h10 - h（右侧）。
对 M/δ 做最小二乘多项式拟合，常数项即 μ_i0。
"""

from typing import Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from PublicTools import logger
from module.Integrable import critical_levels
from module.Model import LevelSet, Perturbation, Region, ReversibleParams
from .AbelianIntegral import melnikov


DEFAULT_OFFSETS = tuple(np.geomspace(1e-3, 1e-2, 12))


def fit_expansion(region: Region, p: ReversibleParams, q: Perturbation,
                  offsets: Optional[Sequence[float]] = None, degree: int = 4,
                  tol: Optional[float] = None) -> np.ndarray:
    """
    拟合展开系数

    参数:
        region: LEFT 对应 h00 处的 μ0j，RIGHT 对应 h10 处的 μ1j
        offsets: 到临界值的距离 δ（均为正）
        degree: M 的多项式次数（拟合 M/δ 时次数减一）

    返回:
        长度为 degree 的数组，近似 (μ_i0, μ_i1, ...)
    """
    region = Region(region)
    offsets = np.asarray(offsets if offsets is not None else DEFAULT_OFFSETS, dtype=float)
    levels = critical_levels(p)
    base = levels.bound(region)
    direction = 1.0 if region is Region.LEFT else -1.0

    values = np.array([
        melnikov(LevelSet.make(base + direction * d, region, levels), p, q, tol, levels)
        for d in offsets
    ])
    coef = P.polyfit(offsets, values / offsets, degree - 1)
    logger.debug(f"展开拟合 {region.value}: {coef}")
    return coef
