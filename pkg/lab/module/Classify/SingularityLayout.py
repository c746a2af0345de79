# -*- coding: utf-8 -*-
"""
奇点分布

可逆系统 dx/dt = y(1+a1x), dy/dt = -x + x² + a4y² 的平衡点：
(0,0) 与 (1,0) 总是存在；(a1+1)·a4 < 0 时另有两点
(-1/a1, ±√(-a4(a1+1))/(a1·a4))，位于奇异直线上。
类型一律由 Jacobian 的行列式与迹判定。
"""

import math
from typing import List, Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from PublicTools import logger
from module.Model import ReversibleParams


KIND_TOL = 1e-12

SingularKind = Literal["center", "saddle", "node", "focus", "degenerate"]


class Equilibrium(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    kind: SingularKind


class SingularityLayout(BaseModel):
    model_config = ConfigDict(frozen=True)

    equilibria: List[Equilibrium]

    def kinds(self) -> List[str]:
        return [e.kind for e in self.equilibria]

    def at(self, x: float, y: float) -> Equilibrium:
        for e in self.equilibria:
            if math.isclose(e.x, x, abs_tol=1e-12) and math.isclose(e.y, y, abs_tol=1e-12):
                return e
        raise KeyError((x, y))


def jacobian_kind(jac: np.ndarray) -> SingularKind:
    """
    由 2x2 Jacobian 判定平衡点类型

    det < 0 鞍点；det = 0 退化；迹为零时为线性中心（可积系统中即中心）；
    其余按判别式区分焦点与结点。
    """
    det = float(np.linalg.det(jac))
    trace = float(np.trace(jac))
    scale = max(1.0, float(np.max(np.abs(jac))) ** 2)
    if abs(det) <= KIND_TOL * scale:
        return "degenerate"
    if det < 0:
        return "saddle"
    if abs(trace) <= KIND_TOL * math.sqrt(scale):
        return "center"
    return "focus" if trace * trace - 4 * det < 0 else "node"


def _reversible_jacobian(x: float, y: float, p: ReversibleParams) -> np.ndarray:
    return np.array([
        [p.a1 * y, 1 + p.a1 * x],
        [-1 + 2 * x, 2 * p.a4 * y],
    ])


def singularity_layout(p: ReversibleParams) -> SingularityLayout:
    """
    列出可逆系统的平衡点及其类型

    参数:
        p: 已校验的参数

    返回:
        SingularityLayout，依次为 (0,0)、(1,0) 以及可能存在的两个附加点（y* > 0 在前）
    """
    a1, a4 = p.a1, p.a4
    points: List[Tuple[float, float]] = [(0.0, 0.0), (1.0, 0.0)]
    if (a1 + 1) * a4 < 0:
        x_star = -1.0 / a1
        y_star = math.sqrt(-a4 * (a1 + 1)) / (a1 * a4)
        points += [(x_star, abs(y_star)), (x_star, -abs(y_star))]

    equilibria = [
        Equilibrium(x=x, y=y, kind=jacobian_kind(_reversible_jacobian(x, y, p)))
        for x, y in points
    ]
    logger.debug(f"奇点分布: a1={a1}, a4={a4}, {[(e.x, e.y, e.kind) for e in equilibria]}")
    return SingularityLayout(equilibria=equilibria)


def lv_one_zero_kind(a1: float, a3: float) -> SingularKind:
    """
    Q3LV 系统 dx/dt = y + a1xy, dy/dt = -x + x² + a3xy - y² 在 (1,0) 的类型

    Jacobian 为 [[0, 1+a1], [1, a3]]。a1 < -1 时，a1 < -(1 + a3²/4) 为焦点，
    介于两者之间为结点；该阈值仅作交叉核对。
    """
    kind = jacobian_kind(np.array([[0.0, 1 + a1], [1.0, a3]]))
    if a1 < -1 and a3 != 0:
        expected = "focus" if a1 < -(1 + a3 * a3 / 4) else "node"
        if kind != expected and kind != "degenerate":
            logger.warning(f"Q3LV (1,0) 类型与阈值不一致: a1={a1}, a3={a3}, {kind} != {expected}")
    return kind
