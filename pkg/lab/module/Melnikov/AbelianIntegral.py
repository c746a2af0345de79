# -*- coding: utf-8 -*-
"""
Abelian 积分与 Melnikov 函数

    M(h) = (a10 + b01)·I0(h) + b11·I1(h) + a10·I2(h)

    I0 = 2σ ∫ |1+a1x|^e1 y_+ dx
    I1 = 2σ ∫ |1+a1x|^e1 x y_+ dx
    I2 = -2(a1+2a4) ∫ |1+a1x|^e2 x y_+ dx

其中 e1 = -(a1+2a4)/a1，e2 = -2(a1+a4)/a1，积分区间为 [x_min, x_max]。
σ 为卵形线的定向：左侧（顺时针）取 +1，右侧（逆时针）取 -1；I2 两侧同号。

端点处 y_+ 有平方根型零点，代换 x = x_min + (x_max - x_min)·sin²θ 后
被积函数光滑，再用 scipy 的自适应 Gauss–Kronrod（quad_vec）同时求三个积分。
"""

import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import quad_vec

from Data.Error import QuadratureFailure
from PublicTools import get_settings, logger
from module.Integrable import critical_levels, radicand, turning_points
from module.Model import CriticalLevels, LevelSet, Perturbation, Region, ReversibleParams


SINGULAR_GAP = 1e-6


class AbelianTriple(BaseModel):
    model_config = ConfigDict(frozen=True)

    I0: float
    I1: float
    I2: float

    def combine(self, q: Perturbation) -> float:
        return (q.a10 + q.b01) * self.I0 + q.b11 * self.I1 + q.a10 * self.I2


def _integrand(p: ReversibleParams, ls: LevelSet, x_min: float, x_max: float):
    a1, a4 = p.a1, p.a4
    e1 = -(a1 + 2 * a4) / a1
    e2 = -2 * (a1 + a4) / a1
    sigma = ls.region.sign
    width = x_max - x_min

    def f(theta):
        x = x_min + width * math.sin(theta) ** 2
        jac = width * math.sin(2 * theta)
        y = math.sqrt(max(radicand(x, ls.h, ls.region, p), 0.0))
        s = abs(1 + a1 * x)
        w1 = s ** e1 * y * jac
        w2 = s ** e2 * x * y * jac
        return np.array([2 * sigma * w1, 2 * sigma * w1 * x, -2 * (a1 + 2 * a4) * w2])

    return f


def _check_gap(p: ReversibleParams, ls: LevelSet, x_min: float, x_max: float) -> None:
    x_s = p.singular_x
    gap = min(abs(x_min - x_s), abs(x_max - x_s))
    if gap < SINGULAR_GAP:
        raise QuadratureFailure("卵形线过于接近奇异直线", {"h": ls.h, "gap": gap})


def abelian_integrals(ls: LevelSet, p: ReversibleParams, tol: Optional[float] = None,
                      levels: Optional[CriticalLevels] = None) -> AbelianTriple:
    """
    在水平集 ls 上计算 (I0, I1, I2)

    参数:
        ls: 严格内部的可容许水平集
        p: 已校验的参数
        tol: 相对容差，None 时取配置 QLC_TOL（默认 1e-11）
        levels: 临界值，None 时重新计算

    返回:
        AbelianTriple

    异常:
        NoOval: 水平集没有卵形线
        QuadratureFailure: 卵形线贴近奇异直线，或误差估计超过容差
    """
    tol = tol or get_settings().tol
    levels = levels or critical_levels(p)
    tp = turning_points(ls, p, levels)
    _check_gap(p, ls, tp.x_min, tp.x_max)

    f = _integrand(p, ls, tp.x_min, tp.x_max)
    value, err, info = quad_vec(f, 0.0, math.pi / 2, epsabs=0.0, epsrel=tol, norm="max",
                                limit=20000, full_output=True)
    scale = float(np.max(np.abs(value)))
    if not info.success:
        logger.debug(f"求积达到细分上限: h={ls.h!r}, err={err:.3e}, status={info.status}")
    if err > 100 * tol * max(scale, np.finfo(float).tiny):
        logger.warning(f"求积未达到容差: h={ls.h!r}, err={err:.3e}, scale={scale:.3e}, status={info.status}")
        raise QuadratureFailure("求积误差超过容差", {"h": ls.h, "error": float(err), "scale": scale})

    logger.debug(f"Abelian 积分: h={ls.h!r}, {ls.region.value}, neval={info.neval}, err={err:.2e}")
    return AbelianTriple(I0=float(value[0]), I1=float(value[1]), I2=float(value[2]))


def brute_force_integrals(ls: LevelSet, p: ReversibleParams, n: int = 10 ** 6,
                          levels: Optional[CriticalLevels] = None) -> AbelianTriple:
    """代换后的中点公式（向量化），作为自适应求积的对照"""
    levels = levels or critical_levels(p)
    tp = turning_points(ls, p, levels)
    a1, a4 = p.a1, p.a4
    width = tp.x_max - tp.x_min

    theta = (np.arange(n) + 0.5) * (math.pi / 2 / n)
    x = tp.x_min + width * np.sin(theta) ** 2
    jac = width * np.sin(2 * theta)
    y = np.sqrt(np.clip(radicand(x, ls.h, ls.region, p), 0.0, None))
    s = np.abs(1 + a1 * x)
    w1 = s ** (-(a1 + 2 * a4) / a1) * y * jac
    w2 = s ** (-2 * (a1 + a4) / a1) * x * y * jac
    d = math.pi / 2 / n
    sigma = ls.region.sign
    return AbelianTriple(
        I0=float(2 * sigma * np.sum(w1) * d),
        I1=float(2 * sigma * np.sum(w1 * x) * d),
        I2=float(-2 * (a1 + 2 * a4) * np.sum(w2) * d),
    )


def melnikov(ls: LevelSet, p: ReversibleParams, q: Perturbation, tol: Optional[float] = None,
             levels: Optional[CriticalLevels] = None) -> float:
    """
    Melnikov 函数 M(h) = (a10 + b01)·I0 + b11·I1 + a10·I2

    示例:
        >>> p = ReversibleParams(a1=-5, a4=-4)
        >>> q = Perturbation(a10=1, b01=-1, b11=26/3)
        >>> melnikov(LevelSet(h=0.1, region=Region.LEFT), p, q)   # 0.0510077880
    """
    if q.a10 == 0 and q.b01 == 0 and q.b11 == 0:
        return 0.0
    return abelian_integrals(ls, p, tol, levels).combine(q)


def melnikov_normalized(ls: LevelSet, p: ReversibleParams, b01_ratio: float, b11_ratio: float,
                        tol: Optional[float] = None) -> float:
    """a10 = 1 的形式：b01 = b01_ratio·a10，b11 = b11_ratio·a10"""
    return melnikov(ls, p, Perturbation(a10=1.0, b01=b01_ratio, b11=b11_ratio), tol)


def level_at(h: float, region: Region, p: ReversibleParams, levels: Optional[CriticalLevels] = None) -> LevelSet:
    return LevelSet.make(h, region, levels or critical_levels(p))
