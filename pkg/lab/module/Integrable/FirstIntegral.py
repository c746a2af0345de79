# -*- coding: utf-8 -*-
"""
可逆系统的首次积分与水平集几何

主要功能：
    - gamma: 积分因子 |1 + a1 x|^(-(a1+2a4)/a1)
    - first_integral: Hamilton 函数 H(x, y)
    - critical_levels: 两个中心处的临界值 h00, h10
    - y_plus / turning_points: 卵形线上支与它和 x 轴的交点
    - vector_field / hamiltonian_field: 扰动系统与 Hamilton 化后的向量场

所有幂次都取 |1 + a1 x| 的实数次幂，符号单独携带，因此不需要
"指数为 2n/m（m 为奇数）" 一类的有理指数条件：奇异直线两侧相互独立，
分析从不需要 H 跨越奇异直线的连续性。

典型用法：
    >>> p = validate_reversible(ReversibleParams(a1=-4, a4=-18/5))
    >>> levels = critical_levels(p)
    >>> ls = LevelSet.make(0.1, Region.LEFT, levels)
    >>> tp = turning_points(ls, p, levels)
"""

import math
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.optimize import brentq

from Data.Error import NoOval, SingularLine
from PublicTools import logger
from module.Model import CriticalLevels, LevelSet, Perturbation, Region, ReversibleParams


SINGULAR_TOL = 1e-14
ROOT_TOL = 1e-13
NEAR_CENTER = 1e-9
MAX_REACH = 1e8


class TurningPoints(BaseModel):
    """卵形线与 x 轴的两个交点"""

    model_config = ConfigDict(frozen=True)

    x_min: float
    x_max: float


# ==================== 基本量 ====================

def _base(x: float, p: ReversibleParams) -> float:
    s = 1.0 + p.a1 * x
    if abs(s) < SINGULAR_TOL:
        raise SingularLine("|1 + a1 x| 过小", {"x": x, "a1": p.a1})
    return s


def _denominator(p: ReversibleParams) -> float:
    return p.a4 * (p.a1 - p.a4) * (p.a1 - 2 * p.a4)


def gamma(x: float, p: ReversibleParams) -> float:
    """积分因子 γ(x) = |1 + a1 x|^(-(a1+2a4)/a1)"""
    s = _base(x, p)
    return abs(s) ** (-(p.a1 + 2 * p.a4) / p.a1)


def first_integral(x: float, y: float, p: ReversibleParams) -> float:
    """
    Hamilton 函数

        H = ½·sign(1+a1x)·|1+a1x|^(-2a4/a1)·[y² + (1+a1-a4)(1+2a4x)/(a4(a1-a4)(a1-2a4)) - x²/(a1-a4)]
    """
    s = _base(x, p)
    a1, a4 = p.a1, p.a4
    bracket = y * y + (1 + a1 - a4) * (1 + 2 * a4 * x) / _denominator(p) - x * x / (a1 - a4)
    return 0.5 * math.copysign(1.0, s) * abs(s) ** (-2 * a4 / a1) * bracket


def critical_levels(p: ReversibleParams) -> CriticalLevels:
    """
    中心 (0,0) 与 (1,0) 处的 H 值（闭式）

        h00 = (1+a1-a4) / (2 a4 (a1-a4)(a1-2a4))
        h10 = -(a1+1)(a4+1)·(-1-a1)^(-2a4/a1) / (2 a4 (a1-a4)(a1-2a4))

    h10 按 |1+a1|^(1-2a4/a1)·(1+a4)/(2D) 计算，a1 < -1 时与上式相同，
    a1 > -1 时 (1,0) 落在左侧区域，仍然等于 H(1,0)。
    """
    a1, a4 = p.a1, p.a4
    d = _denominator(p)
    h00 = (1 + a1 - a4) / (2 * d)
    h10 = abs(1 + a1) ** (1 - 2 * a4 / a1) * (1 + a4) / (2 * d)
    levels = CriticalLevels(h00=h00, h10=h10)
    logger.debug(f"临界值: a1={a1}, a4={a4}, h00={h00!r}, h10={h10!r}")
    return levels


# ==================== 水平集几何 ====================

def radicand(x, h: float, region: Region, p: ReversibleParams):
    """
    y_+² 的表达式（可接受 numpy 数组）

        x²/(a1-a4) - (1+a1-a4)(1+2a4x)/(a4(a1-a4)(a1-2a4)) + 2h·sign·|1+a1x|^(2a4/a1)
    """
    a1, a4 = p.a1, p.a4
    s = np.abs(1.0 + a1 * np.asarray(x, dtype=float))
    value = (np.square(x) / (a1 - a4)
             - (1 + a1 - a4) * (1 + 2 * a4 * np.asarray(x, dtype=float)) / _denominator(p)
             + 2 * h * region.sign * s ** (2 * a4 / a1))
    return value if np.ndim(value) else float(value)


def y_plus(x: float, ls: LevelSet, p: ReversibleParams) -> Optional[float]:
    """
    卵形线上支 y_+(x)

    返回:
        非负根；x 在卵形线之外（或在另一侧区域）时返回 None
    """
    s = _base(x, p)
    if (s > 0) != (ls.region is Region.LEFT):
        return None
    value = radicand(x, ls.h, ls.region, p)
    if value < 0:
        # 中心处 h = h00 时的舍入误差
        scale = abs(2 * ls.h) * abs(s) ** (2 * p.a4 / p.a1) + abs(x * x / (p.a1 - p.a4)) + 1.0
        if value > -1e-14 * scale:
            return 0.0
        return None
    return math.sqrt(value)


def _march(f, x_c: float, direction: float, step: float, x_wall: Optional[float]) -> Tuple[float, float]:
    """
    从中心出发向外推进直到 f 变号，步长按倍数增长；
    朝向奇异直线时每步最多走到剩余距离的一半。
    """
    x_in = x_c
    while True:
        x_out = x_in + direction * step
        if x_wall is not None and (x_out - x_wall) * direction >= 0:
            x_out = x_in + 0.5 * (x_wall - x_in)
            if abs(x_out - x_wall) < SINGULAR_TOL * max(1.0, abs(x_wall)):
                raise SingularLine("区间触及奇异直线", {"x": x_out, "x_s": x_wall})
        if abs(x_out) > MAX_REACH:
            raise NoOval("向外推进未找到变号", {"x": x_out})
        if f(x_out) < 0:
            return x_in, x_out
        x_in = x_out
        step *= 2.0


def turning_points(ls: LevelSet, p: ReversibleParams, levels: Optional[CriticalLevels] = None) -> TurningPoints:
    """
    求卵形线与 x 轴的交点 x_min < x_c < x_max

    参数:
        ls: 水平集（必须严格位于可容许区间内部）
        p: 已校验的参数
        levels: 临界值，None 时重新计算

    异常:
        NoOval: 没有变号（h 不可容许或过于接近中心临界值）
        SingularLine: 区间触及奇异直线
    """
    levels = levels or critical_levels(p)
    distance = ls.distance(levels)
    if not distance > NEAR_CENTER:
        raise NoOval("水平集过于接近中心或不可容许", {"h": ls.h, "distance": distance})

    x_c = ls.region.center_x
    x_s = p.singular_x
    if (1.0 + p.a1 * x_c > 0) != (ls.region is Region.LEFT):
        raise NoOval("该区域不包含中心", {"region": ls.region.value, "a1": p.a1})

    f = lambda x: radicand(x, ls.h, ls.region, p)
    if not f(x_c) > 0:
        raise NoOval("中心处无卵形线", {"h": ls.h, "value": f(x_c)})

    step = 1e-3 * abs(x_c - x_s)
    roots = []
    for direction in (-1.0, 1.0):
        wall = x_s if (x_s - x_c) * direction > 0 else None
        lo, hi = _march(f, x_c, direction, step, wall)
        a, b = (lo, hi) if lo < hi else (hi, lo)
        roots.append(brentq(f, a, b, xtol=ROOT_TOL, rtol=4 * np.finfo(float).eps, maxiter=200))

    x_min, x_max = roots
    logger.debug(f"转向点: h={ls.h!r}, region={ls.region.value}, x_min={x_min!r}, x_max={x_max!r}")
    return TurningPoints(x_min=x_min, x_max=x_max)


def section_abscissa(ls: LevelSet, p: ReversibleParams, levels: Optional[CriticalLevels] = None) -> float:
    """Poincaré 截面 y = 0 上、位于中心远离奇异直线一侧的交点"""
    tp = turning_points(ls, p, levels)
    return tp.x_min if p.singular_x > ls.region.center_x else tp.x_max


# ==================== 向量场 ====================

def vector_field(x: float, y: float, p: ReversibleParams, q: Optional[Perturbation] = None) -> Tuple[float, float]:
    """
    扰动系统

        dx/dt = y(1 + a1 x) + ε a10 x
        dy/dt = -x + x² + a4 y² + ε (b01 y + b11 x y)
    """
    dx = y * (1 + p.a1 * x)
    dy = -x + x * x + p.a4 * y * y
    if q is not None and q.eps:
        dx += q.eps * q.a10 * x
        dy += q.eps * (q.b01 * y + q.b11 * x * y)
    return dx, dy


def hamiltonian_field(x: float, y: float, p: ReversibleParams) -> Tuple[float, float]:
    """(γP, γQ)：乘以积分因子后的无散度向量场"""
    g = gamma(x, p)
    dx, dy = vector_field(x, y, p)
    return g * dx, g * dy
