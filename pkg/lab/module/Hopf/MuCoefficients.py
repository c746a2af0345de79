# -*- coding: utf-8 -*-
"""
Melnikov 展开系数 μ00..μ03, μ10..μ13

M(h) 在 h00 附近展开为 Σ μ0j (h - h00)^j，在 h10 附近展开为 Σ μ1j (h10 - h)^j。
长多项式的系数表放在 module/constants/mu_polynomials.json，
键 "i,j" 表示 a1^i·a4^j 的整数系数，用 numpy 的 polyval2d 求值。

μ10 的前因子取 (-1-a1)^(-3/2)；μ13 的前因子取 (-1-a1)^(-2(a1-3a4)/a1)。
"""

import json
import math
import os
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, ConfigDict

from PublicTools import logger
from module.Model import Perturbation, ReversibleParams


_TABLE_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "constants", "mu_polynomials.json")

PI = math.pi


class MuCoefficients(BaseModel):
    """
    展开系数

    属性:
        mu0: (μ00, μ01, μ02, μ03)
        mu1: (μ10, μ11, μ12, μ13)；a1 >= -1 时 (1,0) 不是中心，为 None
    """

    model_config = ConfigDict(frozen=True)

    mu0: Tuple[float, float, float, float]
    mu1: Optional[Tuple[float, float, float, float]] = None

    def as_dict(self) -> Dict[str, Optional[float]]:
        names = {f"mu0{j}": v for j, v in enumerate(self.mu0)}
        for j in range(4):
            names[f"mu1{j}"] = self.mu1[j] if self.mu1 is not None else None
        return names


def first_nonzero(row, tol: float = 1e-12) -> Optional[int]:
    """第一个非零系数的下标（绝对值相对最大项小于 tol 视为零）"""
    scale = max((abs(v) for v in row), default=0.0)
    for j, value in enumerate(row):
        if abs(value) > tol * max(scale, 1.0):
            return j
    return None


# ==================== 系数表 ====================

@lru_cache(maxsize=1)
def _tables() -> Dict[str, np.ndarray]:
    with open(_TABLE_PATH, "r", encoding="utf-8") as f:
        raw = json.load(f)
    tables = {}
    for name, terms in raw.items():
        keys = [tuple(int(k) for k in key.split(",")) for key in terms]
        size = max(max(i, j) for i, j in keys) + 1
        coef = np.zeros((size, size))
        for (i, j), value in zip(keys, terms.values()):
            coef[i, j] = value
        tables[name] = coef
    logger.debug(f"加载 μ 多项式表: {len(tables)} 个")
    return tables


def poly(name: str, a1, a4):
    """求值 Σ c_ij a1^i a4^j；参数为 Fraction 时按有理数精确求值"""
    coef = _tables()[name]
    if isinstance(a1, Fraction):
        return sum((int(c) * a1 ** i * a4 ** j for (i, j), c in np.ndenumerate(coef) if c), Fraction(0))
    return float(P.polyval2d(a1, a4, coef))


# ==================== 一般公式 ====================

def _row0(a1: float, a4: float, a10: float, b01: float, b11: float) -> Tuple[float, float, float, float]:
    mu00 = 2 * PI * (a10 + b01)
    mu01 = PI / 12 * (poly("mu01_a10", a1, a4) * a10 + poly("mu01_b01", a1, a4) * b01 + 12 * (1 + a4) * b11)
    mu02 = PI / 864 * (poly("mu02_a10", a1, a4) * a10 + poly("mu02_b01", a1, a4) * b01
                       + 24 * (1 + a4) * poly("mu02_b11", a1, a4) * b11)
    mu03 = PI / 622080 * (poly("mu03_a10", a1, a4) * a10 + poly("mu03_b01", a1, a4) * b01
                          + poly("mu03_b11", a1, a4) * b11)
    return mu00, mu01, mu02, mu03


def _row1(a1: float, a4: float, a10: float, b01: float, b11: float) -> Tuple[float, float, float, float]:
    m = -1 - a1
    mu10 = 2 * PI * m ** -1.5 * ((1 - 2 * a4) * a10 + (1 + a1) * (b01 + b11))

    def bracket(j: int) -> float:
        return (poly(f"mu1{j}_a10", a1, a4) * a10
                + (1 + a1) * poly(f"mu1{j}_b01", a1, a4) * b01
                - (1 + a1) * (1 + a4) * poly(f"mu1{j}_b11", a1, a4) * b11)

    mu11 = PI / 12 * m ** (-2 * (a1 - a4) / a1) * bracket(1)
    mu12 = PI / 864 * m ** (-(5 * a1 - 8 * a4) / (2 * a1)) * bracket(2)
    mu13 = PI / 1244160 * m ** (-2 * (a1 - 3 * a4) / a1) * bracket(3)
    return mu10, mu11, mu12, mu13


def mu_coefficients(p: ReversibleParams, q: Perturbation) -> MuCoefficients:
    """
    计算八个展开系数（关于 a10, b01, b11 线性齐次）

    参数:
        p: 已校验的参数
        q: 扰动（eps 不参与）

    返回:
        MuCoefficients；a1 >= -1 时 mu1 为 None

    示例:
        >>> mu = mu_coefficients(ReversibleParams(a1=-5, a4=-4), Perturbation(a10=1, b01=-1, b11=26/3))
        >>> mu.mu1[0]   # -65π/12
    """
    mu0 = _row0(p.a1, p.a4, q.a10, q.b01, q.b11)
    mu1 = _row1(p.a1, p.a4, q.a10, q.b01, q.b11) if p.a1 < -1 else None
    if mu1 is None:
        logger.debug(f"a1={p.a1} >= -1，(1,0) 不是中心，跳过 μ1j")
    return MuCoefficients(mu0=mu0, mu1=mu1)


def mu_exact(a1: Fraction, a4: Fraction, a10: Fraction, b01: Fraction, b11: Fraction) -> MuCoefficients:
    """
    有理参数下的展开系数

    多项式与线性组合部分按有理数精确计算，只在乘以 π 和非整数次幂时舍入，
    因此被求解链消去的系数严格为 0.0。
    """
    a1, a4, a10, b01, b11 = (Fraction(v) for v in (a1, a4, a10, b01, b11))
    mu0 = tuple(float(v) for v in _row0(a1, a4, a10, b01, b11))
    mu1 = tuple(float(v) for v in _row1(a1, a4, a10, b01, b11)) if a1 < -1 else None
    return MuCoefficients(mu0=mu0, mu1=mu1)


# ==================== 约化形式 ====================
# 以下均按 a10 = 1 归一，调用方乘以 a10

def shared_factor(a1: float, a4: float) -> float:
    """a1(a1-a4)(a1+2a4)：各约化形式共有的因子"""
    return a1 * (a1 - a4) * (a1 + 2 * a4)


def mu02_reduced(a1: float, a4: float, a10: float = 1.0) -> float:
    """b01 = -a10 且 b11 取使 μ01 = 0 的值之后的 μ02"""
    return PI / 3 * shared_factor(a1, a4) * (a1 - 3 * a4 - 5) * a10


def mu03_reduced(a1: float, a4: float, a10: float = 1.0) -> float:
    cubic = (770 + 105 * a1 + 1400 * a4 + 42 * a1 ** 2 - 434 * a1 * a4 + 1274 * a4 ** 2
             - 13 * a1 ** 3 + 128 * a1 ** 2 * a4 - 415 * a1 * a4 ** 2 + 444 * a4 ** 3)
    return -PI / 144 * shared_factor(a1, a4) * cubic * a10


def mu10_reduced_20(a1: float, a4: float, a10: float = 1.0) -> float:
    """(2,0) 设置下的 μ10"""
    return -2 * PI / ((1 + a4) * (-1 - a1) ** 1.5) * shared_factor(a1, a4) * a10


def mu12_reduced(a1: float, a4: float, a10: float = 1.0) -> float:
    """右侧链（μ10 = μ11 = 0）之后的 μ12"""
    return (PI / 3 * (-1 - a1) ** (-(5 * a1 - 8 * a4) / (2 * a1))
            * shared_factor(a1, a4) * (6 * a1 - 3 * a4 + 5) * a10)


def mu00_reduced_02(a1: float, a4: float, a10: float = 1.0) -> float:
    """(0,2) 设置下的 μ00"""
    return 2 * PI / ((1 + a1) ** 2 * (a1 - a4 + 1)) * shared_factor(a1, a4) * a10


def mu01_reduced(a1: float, a4: float, a10: float = 1.0) -> float:
    """(1,1) 设置（b01 = -a10，b11 = (a1+2a4)/(1+a1)·a10）下的 μ01"""
    return PI / (1 + a1) * shared_factor(a1, a4) * a10


def mu11_reduced(a1: float, a4: float, a10: float = 1.0) -> float:
    """(1,1) 设置下的 μ11"""
    return -PI * (-1 - a1) ** (-2 * (a1 - a4) / a1) * shared_factor(a1, a4) * a10


# ==================== 直线上的显式值 ====================

def line30_a4(a1: float) -> float:
    return (a1 - 5) / 3


def line03_a4(a1: float) -> float:
    return (6 * a1 + 5) / 3


def on_line30(a1: float, a10: float = 1.0) -> Dict[str, float]:
    """a4 = (a1-5)/3 上的 μ03, μ04, μ10, μ11（μ04 只在此直线上有显式值）"""
    m = -1 - a1
    base = a1 * (a1 + 1) * (a1 - 2) ** 2 * (2 * a1 + 5)
    return {
        "mu03": -25 * PI / 162 * base * a10,
        "mu04": -5 * PI / 8748 * base * (a1 + 4) * (17 * a1 + 518) * a10,
        "mu10": -10 * PI / 3 * m ** -1.5 * a1 * (2 * a1 + 5) * a10,
        "mu11": 25 * PI / 324 * m ** (-2 * (2 * a1 + 5) / (3 * a1)) * a1 * (a1 - 2) ** 2 * (2 * a1 + 5) * a10,
    }


def on_line03(a1: float, a10: float = 1.0) -> Dict[str, float]:
    """a4 = (6a1+5)/3 上的 μ13, μ14, μ00, μ01（μ14 只在此直线上有显式值）"""
    m = -1 - a1
    base = a1 * (3 * a1 + 2) ** 2 * (3 * a1 + 5)
    return {
        "mu13": -25 * PI / 324 * m ** ((10 + 11 * a1) / a1) * base * a10,
        "mu14": -5 * PI / 17496 * m ** ((80 + 87 * a1) / (6 * a1)) * base * (3 * a1 + 4) * (501 * a1 + 518) * a10,
        "mu00": 10 * PI / (3 * (1 + a1) ** 2) * a1 * (3 * a1 + 5) * a10,
        "mu01": -25 * PI / (324 * (1 + a1) ** 2) * base * a10,
    }
