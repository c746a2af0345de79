# -*- coding: utf-8 -*-
"""
其余三类中心的首次积分与向量场：Q3H、Q3LV、Q4
"""

import math
from typing import Tuple

from Data.Error import DivisionByZero, LogDomain


# ==================== Q3H ====================

def first_integral_hamiltonian(x: float, y: float, a1: float, a2: float) -> float:
    """H = ½(x²+y²) - x³/3 + a1·x·y²/2 + a2·y³/3"""
    return 0.5 * (x * x + y * y) - x ** 3 / 3 + a1 * x * y * y / 2 + a2 * y ** 3 / 3


def vector_field_hamiltonian(x: float, y: float, a1: float, a2: float) -> Tuple[float, float]:
    return y + a1 * x * y + a2 * y * y, -x + x * x - 0.5 * a1 * y * y


# ==================== Q3LV ====================

def lv_discriminant(a1: float, a3: float) -> float:
    return a3 * a3 + 4 * (1 + a1)


def lv_g(x: float, y: float, a1: float, a3: float) -> float:
    """g(x,y) = (1+a1x)[(x-1)² + a3(x-1)y - (1+a1)y²]，积分因子为 |g|^-1"""
    u = x - 1
    return (1 + a1 * x) * (u * u + a3 * u * y - (1 + a1) * y * y)


def first_integral_lv(x: float, y: float, a1: float, a3: float) -> float:
    """
    Lotka–Volterra 型系统的首次积分，按判别式 a3² + 4(1+a1) 的符号选择分支：
    正时为反双曲正切分支（前因子 sign(g)），负时为反正切分支（前因子 sign(1+a1x)）。
    对数统一取 |·|；反双曲正切用 ½ln((1+z)/(1-z))，|z| >= 1 时报错。

    异常:
        LogDomain: 对数或反函数的自变量无效
    """
    if a1 == 0 or a1 == -1:
        raise LogDomain("a1 ∈ {0, -1} 时前因子无定义", {"a1": a1})
    d = lv_discriminant(a1, a3)
    if d == 0:
        raise LogDomain("判别式为零", {"a1": a1, "a3": a3})

    u = x - 1
    s = 1 + a1 * x
    quad = (1 + a1) * y * y - a3 * y * u - u * u
    if s == 0 or quad == 0:
        raise LogDomain("对数自变量为零", {"x": x, "y": y})
    logs = 2 * math.log(abs(s)) + a1 * math.log(abs(quad))

    if u == 0:
        tail = 0.0
    else:
        r = math.sqrt(abs(d) * u * u)
        z = (a3 * u - 2 * (1 + a1) * y) / r
        if d > 0:
            if abs(z) >= 1:
                raise LogDomain("tanh⁻¹ 自变量越界", {"z": z})
            tail = 2 * a1 * a3 * u / r * 0.5 * math.log((1 + z) / (1 - z))
        else:
            tail = -2 * a1 * a3 * u / r * math.atan(z)

    sign = math.copysign(1.0, lv_g(x, y, a1, a3)) if d > 0 else math.copysign(1.0, s)
    return -sign / (2 * a1 * (1 + a1)) * (logs + tail)


def vector_field_lv(x: float, y: float, a1: float, a3: float) -> Tuple[float, float]:
    return y + a1 * x * y, -x + x * x + a3 * x * y - y * y


# ==================== Q4 ====================

def q4_g(x: float, y: float, a2: float) -> float:
    """g = 1 - 2(1+2a2²)x - 2a2y + (1+4a2²)(x+a2y)²，积分因子为 |g|^(-5/2)"""
    u = x + a2 * y
    return 1 - 2 * (1 + 2 * a2 * a2) * x - 2 * a2 * y + (1 + 4 * a2 * a2) * u * u


def first_integral_q4(x: float, y: float, a2: float) -> float:
    """
    F = sign(g)·|g|^(-3/2)·f/(12 a2⁶)

    异常:
        DivisionByZero: a2 = 0 或 g = 0
    """
    if a2 == 0:
        raise DivisionByZero("a2 = 0", {"a2": a2})
    g = q4_g(x, y, a2)
    if g == 0:
        raise DivisionByZero("g(x, y) = 0", {"x": x, "y": y})
    s2 = a2 * a2
    u = x + a2 * y
    f = (-(1 + s2)
         + 3 * (u + 2 * s2 * x) * (1 + s2 - (1 + 3 * s2) * u)
         + (1 + 3 * s2) * (1 + 4 * s2) * u ** 3)
    return math.copysign(1.0, g) * abs(g) ** -1.5 * f / (12 * a2 ** 6)


def vector_field_q4(x: float, y: float, a2: float) -> Tuple[float, float]:
    s2 = a2 * a2
    return (y - (1 + 6 * s2) * x * y + a2 * y * y,
            -x + x * x + 5 * a2 * x * y - 2 * (1 + s2) * y * y)
