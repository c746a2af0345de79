# -*- coding: utf-8 -*-
"""
M(h) 的扫描与零点定位

扫描网格在 h 上均匀，靠近临界值的一端（距离小于区间宽度的 0.1 时）
改为几何加密。样本失败时保留并标记 ok=False。
多进程计算样本，输出顺序与网格一致。
"""

import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.optimize import brentq

from Data.Error import LabError, LostBracket
from PublicTools import get_settings, logger
from module.Integrable import critical_levels
from module.Model import LevelSet, Perturbation, Region, ReversibleParams
from .AbelianIntegral import melnikov


ZERO_XTOL = 1e-12
ZERO_MAXITER = 80
SIGN_CHECK_STEP = 1e-8


class MelnikovSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    h: float
    M: float
    ok: bool = True


class ZeroBracket(BaseModel):
    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    M_lo: float
    M_hi: float


class ZeroResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    h_star: float


# ==================== 网格 ====================

def scan_grid(h_lo: float, h_hi: float, n: int, critical: float) -> np.ndarray:
    """
    扫描网格

    参数:
        h_lo, h_hi: 区间端点（h_lo < h_hi）
        n: 点数（>= 2）
        critical: 该区域的临界值 h00 或 h10

    返回:
        严格递增的网格，两端点精确包含
    """
    if n < 2:
        raise ValueError(f"n 至少为 2，当前值: {n}")
    if not h_lo < h_hi:
        raise ValueError(f"要求 h_lo < h_hi: {h_lo}, {h_hi}")
    if n == 2:
        return np.array([h_lo, h_hi])

    uniform = np.linspace(h_lo, h_hi, n)
    width = h_hi - h_lo
    band = 0.1 * width
    near, far = (h_lo, h_hi) if abs(h_lo - critical) <= abs(h_hi - critical) else (h_hi, h_lo)
    d0 = abs(near - critical)
    if d0 >= band or n < 10:
        return uniform

    direction = 1.0 if far > near else -1.0
    n_geo = n // 5
    dist = np.geomspace(max(d0, band * 1e-6), band, n_geo + 1)[:-1]
    geo = critical + direction * dist
    geo[0] = near
    rest = np.linspace(critical + direction * band, far, n - n_geo)
    grid = np.sort(np.concatenate([geo, rest]))
    return grid


# ==================== 扫描 ====================

def _sample(args: Tuple[float, Region, ReversibleParams, Perturbation, float]) -> MelnikovSample:
    h, region, p, q, tol = args
    try:
        ls = LevelSet.make(h, region, critical_levels(p))
        return MelnikovSample(h=h, M=melnikov(ls, p, q, tol))
    except LabError as e:
        logger.warning(f"样本失败 h={h!r}: {type(e).__name__} {e.reason}")
        return MelnikovSample(h=h, M=math.nan, ok=False)


def scan(region: Region, h_lo: float, h_hi: float, n: int, p: ReversibleParams, q: Perturbation,
         jobs: Optional[int] = None, tol: Optional[float] = None) -> List[MelnikovSample]:
    """
    在 [h_lo, h_hi] 上对 M(h) 采样

    参数:
        region: 区域
        h_lo, h_hi: 扫描区间（应在可容许区间内）
        n: 样本数
        p, q: 系统参数与扰动
        jobs: 进程数，None 时取配置 QLC_JOBS，1 表示串行
        tol: 求积相对容差

    返回:
        按 h 递增的样本列表（失败样本 ok=False）
    """
    settings = get_settings()
    jobs = jobs or settings.jobs
    tol = tol or settings.tol
    region = Region(region)
    grid = scan_grid(h_lo, h_hi, n, critical_levels(p).bound(region))
    tasks = [(float(h), region, p, q, tol) for h in grid]

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            samples = list(pool.map(_sample, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        samples = [_sample(t) for t in tasks]

    failed = sum(1 for s in samples if not s.ok)
    logger.info(f"扫描完成: {region.value} [{h_lo!r}, {h_hi!r}] n={n}, 失败 {failed}")
    return samples


def brackets(samples: List[MelnikovSample]) -> List[ZeroBracket]:
    """相邻成功样本之间的变号区间"""
    ok = [s for s in samples if s.ok]
    result = []
    for a, b in zip(ok, ok[1:]):
        if a.M * b.M < 0:
            result.append(ZeroBracket(lo=a.h, hi=b.h, M_lo=a.M, M_hi=b.M))
    return result


# ==================== 零点 ====================

def find_zero(bracket: ZeroBracket, p: ReversibleParams, q: Perturbation, region: Region,
              tol: Optional[float] = None) -> float:
    """
    在变号区间内求 M 的零点（Brent 方法，xtol 1e-12，最多 80 次迭代）

    异常:
        LostBracket: 端点重算后不再变号，或结果两侧没有变号
    """
    region = Region(region)
    levels = critical_levels(p)

    def f(h: float) -> float:
        return melnikov(LevelSet.make(h, region, levels), p, q, tol, levels)

    m_lo, m_hi = f(bracket.lo), f(bracket.hi)
    if not m_lo * m_hi < 0:
        raise LostBracket("端点不再变号", {"lo": bracket.lo, "hi": bracket.hi, "M_lo": m_lo, "M_hi": m_hi})

    h_star = brentq(f, bracket.lo, bracket.hi, xtol=ZERO_XTOL, rtol=4 * np.finfo(float).eps, maxiter=ZERO_MAXITER)

    delta = SIGN_CHECK_STEP * max(1.0, abs(h_star))
    lo, hi = max(bracket.lo, h_star - delta), min(bracket.hi, h_star + delta)
    m_lo, m_hi = f(lo), f(hi)
    if not m_lo * m_hi < 0:
        raise LostBracket("零点两侧符号不一致", {"lo": lo, "hi": hi, "M_lo": m_lo, "M_hi": m_hi})

    logger.info(f"零点: {region.value} h*={h_star!r}  (区间 [{bracket.lo!r}, {bracket.hi!r}])")
    return h_star


def zeros(region: Region, h_lo: float, h_hi: float, n: int, p: ReversibleParams, q: Perturbation,
          jobs: Optional[int] = None, tol: Optional[float] = None) -> List[ZeroResult]:
    """扫描后对每个变号区间求零点"""
    samples = scan(region, h_lo, h_hi, n, p, q, jobs, tol)
    return [
        ZeroResult(lo=b.lo, hi=b.hi, h_star=find_zero(b, p, q, region, tol))
        for b in brackets(samples)
    ]
