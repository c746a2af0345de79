# -*- coding: utf-8 -*-
"""
领域类型与参数校验

主要功能：
    - CanonicalQuadratic: 规范二次系统的四个系数 a1..a4
    - ReversibleParams: 可逆可积系统的 (a1, a4)
    - Perturbation: 二次扰动 (eps, a10, b01, b11)
    - Region / LevelSet / CriticalLevels: 奇异直线 1 + a1*x = 0 两侧的水平集
    - ComplexFormParams: 复形式系统的 λ, A, B, C
    - validate_reversible: 排除退化参数

典型用法：
    >>> p = validate_reversible(ReversibleParams(a1=-3, a4=-8/3))
    >>> p.two_center
    True

所有类型均为不可变值（pydantic frozen 模型），可在线程 / 进程间自由共享。
"""

from enum import Enum
from typing import Annotated, Tuple

from pydantic import BaseModel, ConfigDict, Field

from Data.Error import DegenerateParameters, NoOval, SingularLine
from PublicTools import logger


# 与排除集合比较时的绝对容差，下游公式会除以这些差值
DEGENERACY_TOL = 1e-12

Finite = Annotated[float, Field(allow_inf_nan=False)]


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class CanonicalQuadratic(_Frozen):
    """规范二次系统 (a1, a2, a3, a4)"""

    a1: Finite
    a2: Finite
    a3: Finite
    a4: Finite


class ReversibleParams(_Frozen):
    """
    可逆可积系统参数

    构造时只检查有限性，退化排除由 validate_reversible 负责。
    """

    a1: Finite
    a4: Finite

    @property
    def two_center(self) -> bool:
        return self.a1 < -1 and self.a4 < 0

    @property
    def singular_x(self) -> float:
        return -1.0 / self.a1


class Perturbation(_Frozen):
    """二次扰动，eps = 0 表示未扰动的可积系统"""

    eps: Finite = Field(default=0.0, ge=0.0)
    a10: Finite = 0.0
    b01: Finite = 0.0
    b11: Finite = 0.0

    def scaled(self, c: float) -> "Perturbation":
        """(a10, b01, b11) 同时乘以 c，eps 不变"""
        return self.model_copy(update={"a10": c * self.a10, "b01": c * self.b01, "b11": c * self.b11})

    def normalized(self) -> "Perturbation":
        """a10 = 1 的形式（M = M_{i0}(h)·a10）"""
        if self.a10 == 0:
            raise DegenerateParameters("a10 = 0，无法归一化", {"a10": self.a10})
        return self.scaled(1.0 / self.a10)


class Region(str, Enum):
    """奇异直线两侧：LEFT 为 1 + a1*x > 0，RIGHT 为 1 + a1*x < 0"""

    LEFT = "left"
    RIGHT = "right"

    @property
    def sign(self) -> int:
        return 1 if self is Region.LEFT else -1

    @property
    def center_x(self) -> float:
        # a1 < -1 时，左侧包含 (0,0)，右侧包含 (1,0)
        return 0.0 if self is Region.LEFT else 1.0

    @classmethod
    def from_x(cls, x: float, a1: float) -> "Region":
        s = 1.0 + a1 * x
        if s == 0:
            raise SingularLine("点位于奇异直线上", {"x": x, "a1": a1})
        return cls.LEFT if s > 0 else cls.RIGHT


class CriticalLevels(_Frozen):
    """两个中心处的 H 值：h00 = H(0,0)，h10 = H(1,0)"""

    h00: Finite
    h10: Finite

    def bound(self, region: Region) -> float:
        return self.h00 if region is Region.LEFT else self.h10


class LevelSet(_Frozen):
    """水平集 L_h：H(x, y) = h，限定在某一侧区域"""

    h: Finite
    region: Region

    @classmethod
    def make(cls, h: float, region: Region, levels: CriticalLevels) -> "LevelSet":
        """
        构造并检查可容许性：左侧要求 h > h00，右侧要求 h < h10（临界值本身是中心点，不是卵形线）

        异常:
            NoOval: h 不在该区域的可容许区间内
        """
        region = Region(region)
        if region is Region.LEFT and not h > levels.h00:
            raise NoOval("左侧要求 h > h00", {"h": h, "h00": levels.h00})
        if region is Region.RIGHT and not h < levels.h10:
            raise NoOval("右侧要求 h < h10", {"h": h, "h10": levels.h10})
        return cls(h=h, region=region)

    def distance(self, levels: CriticalLevels) -> float:
        """到所属中心临界值的距离（非负）"""
        return (self.h - levels.h00) if self.region is Region.LEFT else (levels.h10 - self.h)

    def interior(self, levels: CriticalLevels) -> bool:
        return self.distance(levels) > 0


class ComplexFormParams(_Frozen):
    """复形式系统：λ 与复系数 A = A1 + i A2, B, C"""

    lam: Finite = 0.0
    A: Tuple[Finite, Finite] = (0.0, 0.0)
    B: Tuple[Finite, Finite] = (0.0, 0.0)
    C: Tuple[Finite, Finite] = (0.0, 0.0)

    @property
    def a(self) -> complex:
        return complex(*self.A)

    @property
    def b(self) -> complex:
        return complex(*self.B)

    @property
    def c(self) -> complex:
        return complex(*self.C)


def validate_reversible(p: ReversibleParams) -> ReversibleParams:
    """
    检查可逆系统的排除集合

    排除：a4 = 0, a1 = a4, a1 = 2*a4, a1 = 0, a1 = -1（绝对容差 1e-12）

    参数:
        p: 待检查参数

    返回:
        原样返回 p（幂等）；two_center 标志由 a1 < -1 且 a4 < 0 决定

    异常:
        DegenerateParameters: reason 指明触发的排除条件
    """
    a1, a4 = p.a1, p.a4
    checks = (
        ("a4=0", a4),
        ("a1=a4", a1 - a4),
        ("a1=2·a4", a1 - 2 * a4),
        ("a1=0", a1),
        ("a1=-1", a1 + 1),
    )
    for reason, residual in checks:
        if abs(residual) < DEGENERACY_TOL:
            logger.debug(f"参数退化: {reason}, a1={a1}, a4={a4}")
            raise DegenerateParameters(reason, {"a1": a1, "a4": a4})
    return p


