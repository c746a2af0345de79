# -*- coding: utf-8 -*-
"""
小极限环分布的参数求解

主要功能：
    - solve_b01_zero_mu00 / solve_b11_zero_mu01: 左侧链（μ00 = μ01 = 0）
    - solve_a4_zero_mu02 / solve_a4_zero_mu12: 使 μ02 或 μ12 为零的直线
    - solve_chain_right: 右侧链（μ10 = μ11 = 0）
    - distribution: 给出 (n0, n1) 分布的实现参数与非零见证

(n0, n1) 表示 (0,0) 与 (1,0) 周围的小极限环个数。可实现的分布为
(3,0), (0,3), (2,0), (0,2), (1,1), (1,0), (0,1), (0,0)；(2,1) 与 (1,2) 不存在：
两侧链共用因子 a1(a1-a4)(a1+2a4)·a10，一侧多消去一个系数就会迫使另一侧首项非零。
"""

from fractions import Fraction
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from Data.Error import DegenerateParameters, ImpossibleDistribution
from PublicTools import logger
from module.Model import DEGENERACY_TOL, Perturbation, ReversibleParams, validate_reversible
from .MuCoefficients import (
    MuCoefficients,
    line03_a4,
    line30_a4,
    mu_coefficients,
    mu_exact,
    shared_factor,
)


ACHIEVABLE = {(3, 0), (0, 3), (2, 0), (0, 2), (1, 1), (1, 0), (0, 1), (0, 0)}


class Distribution(BaseModel):
    """
    分布的实现结果

    属性:
        n0, n1: 两个中心周围的小极限环个数
        a1, a4, a10, b01, b11: 实现该分布的参数
        mu: 对应的展开系数
        witnesses: 必须非零的见证量
        schedule: 扰动顺序（只记录次序，不给出数值）
        route: 求解路线
    """

    model_config = ConfigDict(frozen=True)

    n0: int
    n1: int
    a1: float
    a4: float
    a10: float
    b01: float
    b11: float
    mu: MuCoefficients
    witnesses: Dict[str, float]
    schedule: List[str]
    route: str = "general"


# ==================== 单步求解 ====================

def solve_b01_zero_mu00(a10: float) -> float:
    """μ00 = 2π(a10 + b01) = 0  =>  b01 = -a10"""
    return -a10


def solve_b11_zero_mu01(p: ReversibleParams, a10: float) -> float:
    """
    b01 = -a10 时使 μ01 = 0 的 b11

        b11 = -(a1-1-a4)(a1+2a4)/(1+a4)·a10

    异常:
        DegenerateParameters: a4 = -1
    """
    a1, a4 = p.a1, p.a4
    if abs(1 + a4) < DEGENERACY_TOL:
        raise DegenerateParameters("a4=-1", {"a1": a1, "a4": a4})
    return _b11_mu01(a1, a4, a10)


def _b11_mu01(a1, a4, a10):
    return -(a1 - 1 - a4) * (a1 + 2 * a4) / (1 + a4) * a10


def solve_a4_zero_mu02(a1: float) -> float:
    """左侧链之后 μ02 ∝ (a1 - 3a4 - 5)，取 a4 = (a1-5)/3"""
    return line30_a4(a1)


def solve_a4_zero_mu12(a1: float) -> float:
    """右侧链之后 μ12 ∝ (6a1 - 3a4 + 5)，取 a4 = (6a1+5)/3"""
    return line03_a4(a1)


def solve_chain_right(p: ReversibleParams, a10: float) -> Tuple[float, float]:
    """
    使 μ10 = μ11 = 0 的 (b01, b11)

        b11 = (a1+2a4)(2a1-a4+1) / ((1+a1)²(a1-a4+1))·a10
        b01 = -b11 + (2a4-1)/(1+a1)·a10

    异常:
        DegenerateParameters: a1 - a4 + 1 = 0，此时改用 (1,1) 分布
    """
    a1, a4 = p.a1, p.a4
    if not a1 < -1:
        raise DegenerateParameters("右侧链要求 a1 < -1", {"a1": a1})
    if abs(a1 - a4 + 1) < DEGENERACY_TOL:
        raise DegenerateParameters(
            "a1-a4+1=0",
            {"a1": a1, "a4": a4, "fallback": "(1,1)-distribution with b11 = (3a1+2)/(1+a1)·a10"},
        )
    return _chain_right(a1, a4, a10)


def _chain_right(a1, a4, a10):
    b11 = (a1 + 2 * a4) * (2 * a1 - a4 + 1) / ((1 + a1) ** 2 * (a1 - a4 + 1)) * a10
    b01 = -b11 + (2 * a4 - 1) / (1 + a1) * a10
    return b01, b11


def solve_one_one(p: ReversibleParams, a10: float) -> Tuple[float, float]:
    """μ00 = μ10 = 0：b01 = -a10，b11 = (a1+2a4)/(1+a1)·a10"""
    return _one_one(p.a1, p.a4, a10)


def _one_one(a1, a4, a10):
    return -a10, (a1 + 2 * a4) / (1 + a1) * a10


# ==================== 分布 ====================

def _require(witnesses: Dict[str, float], target: Tuple[int, int]) -> None:
    for name, value in witnesses.items():
        if abs(value) < DEGENERACY_TOL:
            logger.debug(f"分布 {target}: 见证量 {name} 为零")
            raise DegenerateParameters(f"{name}=0", {"target": list(target), "witness": name})


def _nonzero(value: float) -> bool:
    return abs(value) > DEGENERACY_TOL


def distribution(p: ReversibleParams, target: Tuple[int, int], a10: float = 1.0) -> Distribution:
    """
    求实现 (n0, n1) 分布的参数

    参数:
        p: 参数；(3,0) 与 (0,3) 只使用 a1，a4 由直线确定
        target: 目标分布 (n0, n1)
        a10: 扰动系数 a10（其余系数按它的倍数给出）

    返回:
        Distribution

    异常:
        ImpossibleDistribution: (2,1)、(1,2) 或不在可实现集合中的目标
        DegenerateParameters: 见证量为零或参数落在排除集合中

    示例:
        >>> d = distribution(ReversibleParams(a1=-30/7, a4=-1.5), (3, 0))
        >>> d.a4, d.b11      # -65/21, 230/21
    """
    target = (int(target[0]), int(target[1]))
    a1 = p.a1

    if target not in ACHIEVABLE:
        witness = shared_factor(a1, p.a4) * a10
        logger.info(f"分布 {target} 不可实现")
        if target in ((2, 1), (1, 2)):
            reason = (f"impossible distribution {target}: (2,1) and (1,2) do not exist, both chains share "
                      f"the factor a1(a1-a4)(a1+2a4)·a10 so cancelling a third coefficient on one side "
                      f"forces the leading coefficient on the other side to be nonzero")
        else:
            reason = f"impossible distribution {target}: not in {sorted(ACHIEVABLE)}"
        raise ImpossibleDistribution(
            reason,
            {"target": list(target), "shared_factor": witness, "a1": a1, "a4": p.a4},
        )
    if not a1 < -1:
        raise DegenerateParameters("两个中心要求 a1 < -1", {"a1": a1})
    if a10 == 0:
        raise DegenerateParameters("a10=0", {"a10": a10})

    route = "general"
    if target == (3, 0):
        witnesses = {"(2a1+5)·a10": (2 * a1 + 5) * a10}
        _require(witnesses, target)
        p = validate_reversible(ReversibleParams(a1=a1, a4=solve_a4_zero_mu02(a1)))
        b01 = solve_b01_zero_mu00(a10)
        b11 = solve_b11_zero_mu01(p, a10)
        schedule = ["a4 (μ02)", "b11 (μ01)", "b01 (μ00)"]
    elif target == (0, 3):
        witnesses = {"(3a1+5)·a10": (3 * a1 + 5) * a10}
        _require(witnesses, target)
        p = validate_reversible(ReversibleParams(a1=a1, a4=solve_a4_zero_mu12(a1)))
        b01, b11 = solve_chain_right(p, a10)
        schedule = ["a4 (μ12)", "b11 (μ11)", "b01 (μ10)"]
    elif target == (2, 0):
        p = validate_reversible(p)
        b01 = solve_b01_zero_mu00(a10)
        b11 = solve_b11_zero_mu01(p, a10)
        witnesses = {"a1(a1-a4)(a1+2a4)(a1-3a4-5)·a10": shared_factor(a1, p.a4) * (a1 - 3 * p.a4 - 5) * a10}
        schedule = ["b11 (μ01)", "b01 (μ00)"]
    elif target == (0, 2):
        p = validate_reversible(p)
        b01, b11 = solve_chain_right(p, a10)
        witnesses = {"a1(a1-a4)(a1+2a4)(6a1-3a4+5)·a10": shared_factor(a1, p.a4) * (6 * a1 - 3 * p.a4 + 5) * a10}
        schedule = ["b11 (μ11)", "b01 (μ10)"]
    elif target == (1, 1):
        p = validate_reversible(p)
        b01, b11 = solve_one_one(p, a10)
        if abs(1 + p.a4) < DEGENERACY_TOL:
            route = "a4=-1"
            witnesses = {"a1(a1-2)·a10": a1 * (a1 - 2) * a10}
        elif abs(a1 - p.a4 + 1) < DEGENERACY_TOL:
            route = "a1-a4+1=0"
            witnesses = {"a1(3a1+2)·a10": a1 * (3 * a1 + 2) * a10}
        else:
            witnesses = {"a1(a1-a4)(a1+2a4)·a10": shared_factor(a1, p.a4) * a10}
        schedule = ["b11 (μ10)", "b01 (μ00)"]
    else:
        p = validate_reversible(p)
        b01, b11, witnesses, schedule = _generic(p, target, a10)

    _require(witnesses, target)
    a4x, b01x, b11x = _exact_chain(target, a1, p.a4, a10, b01, b11)
    mu = mu_exact(Fraction(a1), a4x, Fraction(a10), b01x, b11x)
    b01, b11 = float(b01x), float(b11x)
    result = Distribution(
        n0=target[0], n1=target[1], a1=a1, a4=float(a4x), a10=a10, b01=b01, b11=b11,
        mu=mu, witnesses=witnesses, schedule=schedule, route=route,
    )
    logger.info(f"分布 {target}: a1={a1}, a4={p.a4}, b01={b01!r}, b11={b11!r}, route={route}")
    return result


def _exact_chain(target: Tuple[int, int], a1: float, a4: float, a10: float, b01: float, b11: float):
    """按同一条链用有理数重新求解 (a4, b01, b11)；其余目标取浮点值的精确有理表示"""
    a1x, a10x = Fraction(a1), Fraction(a10)
    if target == (3, 0):
        a4x = solve_a4_zero_mu02(a1x)
    elif target == (0, 3):
        a4x = solve_a4_zero_mu12(a1x)
    else:
        a4x = Fraction(a4)
    if target in ((3, 0), (2, 0)):
        return a4x, -a10x, _b11_mu01(a1x, a4x, a10x)
    if target in ((0, 3), (0, 2)):
        return (a4x, *_chain_right(a1x, a4x, a10x))
    if target == (1, 1):
        return (a4x, *_one_one(a1x, a4x, a10x))
    if target == (0, 1):
        b11x = Fraction(b11)
        return a4x, -b11x + (2 * a4x - 1) / (1 + a1x) * a10x, b11x
    return a4x, Fraction(b01), Fraction(b11)


def _generic(p: ReversibleParams, target: Tuple[int, int], a10: float):
    """(1,0), (0,1), (0,0)：只需一个或零个系数为零，b11 取 0，不行再取 a10"""
    for b11 in (0.0, a10):
        if target == (1, 0):
            b01 = solve_b01_zero_mu00(a10)
        elif target == (0, 1):
            b01 = -b11 + (2 * p.a4 - 1) / (1 + p.a1) * a10
        else:
            b01 = 0.0
        mu = mu_coefficients(p, Perturbation(a10=a10, b01=b01, b11=b11))
        leading = {
            (1, 0): {"μ01": mu.mu0[1], "μ10": mu.mu1[0]},
            (0, 1): {"μ11": mu.mu1[1], "μ00": mu.mu0[0]},
            (0, 0): {"μ00": mu.mu0[0], "μ10": mu.mu1[0]},
        }[target]
        if all(_nonzero(v) for v in leading.values()):
            schedule = {(1, 0): ["b01 (μ00)"], (0, 1): ["b01 (μ10)"], (0, 0): []}[target]
            return b01, b11, leading, schedule
    return b01, b11, leading, []
