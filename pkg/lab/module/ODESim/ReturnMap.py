# -*- coding: utf-8 -*-
"""
Poincaré 回归映射与大极限环定位

截面取 y = 0 上、中心远离奇异直线的一侧。回归点为下一次同方向穿越截面的点，
穿越时刻由短区间重积分加 Brent 方法精化到 |y| <= 1e-12。

一次回归的水平变化 ΔH ≈ ε·M(h)；截面上 ∂H/∂x 的符号固定，
因此位移 d(x) 的变号与 M 的零点对应。
"""

import math
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from Data.Error import EscapedAnnulus, LabError, NoSignChange, SingularLineHit
from PublicTools import logger
from module.Integrable import critical_levels, first_integral, section_abscissa
from module.Model import LevelSet, Perturbation, Region, ReversibleParams
from .Integrator import (
    ATOL_SCALE,
    SINGULAR_GUARD,
    TOL_RANGE,
    check_tol,
    escape_radius,
    make_rhs,
    make_solver,
    steps,
)


CROSS_TOL = 1e-12
RETURN_TOL_SCALE = 0.1
RETURN_T_MAX = 1e4
FIXED_POINT_TOL = 1e-9
NOISE_FLOOR = 1e-10
BRACKET_STEPS = 8

CenterName = Literal["origin", "one_zero"]
Stability = Literal["attracting", "repelling", "undetermined"]


class CycleReport(BaseModel):
    """
    定位到的极限环

    属性:
        center: 所包围的中心
        x_cross: 截面 y = 0 上的不动点
        period: 周期估计
        stability: 由不动点两侧位移符号判定
        h_assoc: H(x_cross, 0)
        h_hint: 搜索起点对应的水平值
        eps: 扰动幅度
        residual: |return(x_cross) - x_cross|
    """

    model_config = ConfigDict(frozen=True)

    center: CenterName
    x_cross: float
    period: float
    stability: Stability
    h_assoc: float
    h_hint: float
    eps: float
    residual: float


def center_region(center: CenterName) -> Region:
    return Region.LEFT if center == "origin" else Region.RIGHT


def section_side(p: ReversibleParams, center: CenterName) -> float:
    """截面所在一侧：+1 表示 x > x_c，-1 表示 x < x_c"""
    x_c = center_region(center).center_x
    return -1.0 if p.singular_x > x_c else 1.0


# ==================== 回归映射 ====================

def return_tol(tol: Optional[float]) -> float:
    """回归映射内部使用的每步容差：tol 的 RETURN_TOL_SCALE 倍，不低于 1e-13"""
    return max(check_tol(tol) * RETURN_TOL_SCALE, TOL_RANGE[0])


def _refine(p: ReversibleParams, q: Perturbation, t_a: float, s_a: np.ndarray, dt: float,
            tol: float) -> Tuple[float, float]:
    """在 [t_a, t_a + dt] 内用重积分求 y = 0 的时刻，返回 (t, x)"""
    rhs = make_rhs(p, q)

    def advance(tau: float) -> np.ndarray:
        if tau <= 0:
            return s_a
        sol = solve_ivp(rhs, (0.0, tau), s_a, method="RK45", rtol=tol, atol=tol * ATOL_SCALE)
        return sol.y[:, -1]

    tau = brentq(lambda s: advance(s)[1], 0.0, dt, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=100)
    state = advance(tau)
    if abs(state[1]) > CROSS_TOL:
        logger.debug(f"穿越点精化后 |y| = {abs(state[1]):.2e}")
    # 沿切向做一次 Newton 修正，消去残余的 y
    dx, dy = rhs(0.0, state)
    if dy != 0:
        tau -= state[1] / dy
        state = np.array([state[0] - state[1] * dx / dy, 0.0])
    return t_a + tau, float(state[0])


def _return(p: ReversibleParams, q: Perturbation, x_start: float, center: CenterName,
            tol: Optional[float] = None, t_max: float = RETURN_T_MAX) -> Tuple[float, float]:
    tol = return_tol(tol)
    region = center_region(center)
    x_c = region.center_x
    side = section_side(p, center)
    if not (x_start - x_c) * side > 0:
        raise EscapedAnnulus("起点不在截面一侧", {"x_start": x_start, "center": center})
    Region.from_x(x_start, p.a1)

    # y = 0 上 dy/dt = x(x - 1)，决定穿越方向
    direction = math.copysign(1.0, x_start * (x_start - 1))
    x_s = p.singular_x
    radius = escape_radius(p, x_start, 0.0)
    solver = make_solver(p, q, x_start, 0.0, 0.0, t_max, tol)

    left_section = False
    for t_prev, s_prev, t, s, _ in steps(solver):
        if abs(s[0] - x_s) < SINGULAR_GUARD:
            raise SingularLineHit("轨线接近奇异直线", {"t": t, "x": float(s[0]), "x_start": x_start})
        if abs(s[0]) + abs(s[1]) > radius:
            raise EscapedAnnulus("轨线逃逸", {"t": t, "x": float(s[0]), "y": float(s[1]), "radius": radius})
        if not left_section:
            left_section = s[1] * direction > 0
            continue
        if s_prev[1] * direction < 0 <= s[1] * direction and (s[0] - x_c) * side > 0:
            return _refine(p, q, t_prev, s_prev, t - t_prev, tol)

    raise EscapedAnnulus("未在时限内回到截面", {"x_start": x_start, "t_max": t_max})


def return_map(p: ReversibleParams, q: Perturbation, x_start: float, center: CenterName,
               tol: Optional[float] = None) -> float:
    """
    回归映射：从 (x_start, 0) 出发，返回下一次同方向穿越截面时的 x

    异常:
        EscapedAnnulus: 轨线离开周期环域或未返回
        SingularLineHit: 轨线接近奇异直线
    """
    return _return(p, q, x_start, center, tol)[1]


def displacement(p: ReversibleParams, q: Perturbation, x: float, center: CenterName,
                 tol: Optional[float] = None) -> float:
    """d(x) = return(x) - x"""
    return return_map(p, q, x, center, tol) - x


def level_change(p: ReversibleParams, q: Perturbation, x: float, center: CenterName,
                 tol: Optional[float] = None) -> float:
    """一次回归的 ΔH = H(return(x), 0) - H(x, 0)，与 ε·M(H(x, 0)) 同号"""
    return first_integral(return_map(p, q, x, center, tol), 0.0, p) - first_integral(x, 0.0, p)


# ==================== 极限环定位 ====================

def _profile_point(p, q, h, center, tol, levels) -> Optional[Tuple[float, float]]:
    try:
        ls = LevelSet.make(h, center_region(center), levels)
        x = section_abscissa(ls, p, levels)
        return x, displacement(p, q, x, center, tol)
    except LabError as e:
        logger.debug(f"位移采样失败 h={h!r}: {type(e).__name__}")
        return None


def _sign(d: float) -> int:
    return 0 if abs(d) <= NOISE_FLOOR else (1 if d > 0 else -1)


def locate_cycle(p: ReversibleParams, q: Perturbation, center: CenterName, h_hint: float,
                 tol: Optional[float] = None) -> CycleReport:
    """
    在 L_{h_hint} 附近定位大极限环

    从 h_hint 两侧按倍增的间距取水平值，求截面位移，找到变号后
    对 x 用 Brent 方法求不动点，并按两侧的向外位移判定稳定性。

    异常:
        NoSignChange: eps = 0 或采样范围内位移不变号（details 中给出采样剖面）
    """
    tol = check_tol(tol)
    region = center_region(center)
    levels = critical_levels(p)
    side = section_side(p, center)
    if q.eps == 0:
        raise NoSignChange("eps = 0 时所有轨道闭合", {"center": center, "h_hint": h_hint})

    base = levels.bound(region)
    spread = 0.02 * abs(h_hint - base)
    inward = -1.0 if region is Region.LEFT else 1.0
    profile: List[Tuple[float, float, float]] = []
    anchor = _profile_point(p, q, h_hint, center, tol, levels)
    if anchor is not None:
        profile.append((h_hint, *anchor))

    bracket = None
    for _ in range(BRACKET_STEPS):
        for h in (h_hint + inward * spread, h_hint - inward * spread):
            point = _profile_point(p, q, h, center, tol, levels)
            if point is not None:
                profile.append((h, *point))
        profile.sort(key=lambda r: r[1])
        for a, b in zip(profile, profile[1:]):
            if _sign(a[2]) * _sign(b[2]) < 0:
                bracket = (a, b)
                break
        if bracket is not None:
            break
        spread *= 2

    if bracket is None:
        logger.info(f"位移不变号: center={center}, h_hint={h_hint!r}")
        raise NoSignChange("位移在采样范围内不变号", {
            "center": center,
            "profile": [{"h": h, "x": x, "d": d} for h, x, d in profile],
        })

    (_, x_a, d_a), (_, x_b, d_b) = bracket
    x_star = brentq(lambda x: displacement(p, q, x, center, tol), x_a, x_b, xtol=1e-13, maxiter=100)
    t_ret, x_ret = _return(p, q, x_star, center, tol)
    residual = abs(x_ret - x_star)
    if residual > FIXED_POINT_TOL:
        logger.warning(f"不动点残差 {residual:.2e} 超过 {FIXED_POINT_TOL}")

    # 向外位移：内侧点向外、外侧点向内为吸引
    inner, outer = sorted([(x_a, d_a), (x_b, d_b)], key=lambda r: abs(r[0] - region.center_x))
    out_inner, out_outer = _sign(inner[1] * side), _sign(outer[1] * side)
    if out_inner > 0 > out_outer:
        stability = "attracting"
    elif out_inner < 0 < out_outer:
        stability = "repelling"
    else:
        stability = "undetermined"

    report = CycleReport(
        center=center, x_cross=x_star, period=t_ret, stability=stability,
        h_assoc=first_integral(x_star, 0.0, p), h_hint=h_hint, eps=q.eps, residual=residual,
    )
    logger.info(f"极限环: center={center}, x={x_star!r}, h={report.h_assoc!r}, {stability}, T={t_ret:.4f}")
    return report
