# -*- coding: utf-8 -*-
"""
中心类型判定

主要功能：
    - classify_canonical: 规范二次系统 (a1..a4) 的 Q3LV / Q3H / Q3R / Q4 判定
    - classify_complex: 复形式系统 (λ, A, B, C) 的判定与第一焦点量 v1
    - complex_to_canonical: 复形式到规范形式的参数映射
    - complex_to_real_field: 复形式对应的实坐标向量场

判定基于残差（绝对容差 1e-10），多个类型同时成立时全部列出，
主标签按 Q3H > Q3LV > Q3R > Q4 的优先级选取。
"""

from typing import Callable, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from Data.Error import DegenerateMap
from PublicTools import logger
from module.Model import CanonicalQuadratic, ComplexFormParams


CLASSIFY_TOL = 1e-10
MAP_TOL = 1e-12

CenterLabel = Literal["Q3LV", "Q3H", "Q3R", "Q4"]

PRIORITY: Tuple[str, ...] = ("Q3H", "Q3LV", "Q3R", "Q4")


class CenterClass(BaseModel):
    """
    判定结果

    属性:
        label: 主标签，None 表示没有任何条件组成立
        labels: 所有成立的标签（按优先级排序）
        residuals: "类型.条件" -> 残差绝对值
        v1: 第一焦点量（仅复形式）
        note: 附加说明（例如三元条件归入 Q3R）
    """

    model_config = ConfigDict(frozen=True)

    label: Optional[CenterLabel] = None
    labels: List[CenterLabel] = []
    residuals: Dict[str, float] = {}
    v1: Optional[float] = None
    note: Optional[str] = None


def _decide(groups: Dict[str, Dict[str, float]]) -> Tuple[List[str], Dict[str, float]]:
    residuals = {}
    passed = []
    for name, group in groups.items():
        for key, value in group.items():
            residuals[f"{name}.{key}"] = abs(value)
        if all(abs(v) <= CLASSIFY_TOL for v in group.values()):
            passed.append(name)
    return passed, residuals


def _ordered(labels: List[str]) -> List[str]:
    return [name for name in PRIORITY if name in labels]


# ==================== 规范形式 ====================

def classify_canonical(c: CanonicalQuadratic) -> CenterClass:
    """
    判定规范系统 dx/dt = y + a1xy + a2y², dy/dt = -x + x² + a3xy + a4y² 的中心类型

    另外检查三元条件
        a3 - 5a2 = a1 - (5 + 3a4) = 3(a4+2)(a4+1)² - (5a4+6)a2² = 0
    成立时系统实际属于 Q3R，以附注形式说明。

    参数:
        c: 规范系统系数

    返回:
        CenterClass
    """
    a1, a2, a3, a4 = c.a1, c.a2, c.a3, c.a4
    groups = {
        "Q3R": {"a3": a3, "a2": a2},
        "Q3H": {"a3": a3, "a1+2a4": a1 + 2 * a4},
        "Q3LV": {"a2": a2, "1+a4": 1 + a4},
        "Q4": {
            "a3-5a2": a3 - 5 * a2,
            "a1-5-3a4": a1 - 5 - 3 * a4,
            "a4+2(1+a2^2)": a4 + 2 * (1 + a2 * a2),
        },
    }
    passed, residuals = _decide(groups)

    triple = {
        "a3-5a2": a3 - 5 * a2,
        "a1-5-3a4": a1 - 5 - 3 * a4,
        "3(a4+2)(a4+1)^2-(5a4+6)a2^2": 3 * (a4 + 2) * (a4 + 1) ** 2 - (5 * a4 + 6) * a2 * a2,
    }
    note = None
    for key, value in triple.items():
        residuals[f"Q3R.triple.{key}"] = abs(value)
    if all(abs(v) <= CLASSIFY_TOL for v in triple.values()) and "Q3R" not in passed:
        passed.append("Q3R")
        note = "三元条件成立，经坐标变换后属于 Q3R 可逆系统"

    labels = _ordered(passed)
    result = CenterClass(label=labels[0] if labels else None, labels=labels, residuals=residuals, note=note)
    logger.debug(f"规范系统判定: {c.model_dump()} -> {result.label} {labels}")
    return result


# ==================== 复形式 ====================

def classify_complex(z: ComplexFormParams) -> CenterClass:
    """
    判定复形式 dz/dt = (i + λ)z + Az² + Bzz̄ + Cz̄² 的中心类型

    条件：
        Q3LV: λ = B = 0
        Q3H:  λ = 2A + B̄ = 0
        Q3R:  λ = Im(AB) = Im(B̄³C) = Im(A³C) = 0
        Q4:   λ = A - 2B̄ = |C| - |B| = 0
    """
    a, b, c = z.a, z.b, z.c
    lam = z.lam
    groups = {
        "Q3LV": {"lambda": lam, "|B|": abs(b)},
        "Q3H": {"lambda": lam, "|2A+conj(B)|": abs(2 * a + b.conjugate())},
        "Q3R": {
            "lambda": lam,
            "Im(AB)": (a * b).imag,
            "Im(conj(B)^3C)": (b.conjugate() ** 3 * c).imag,
            "Im(A^3C)": (a ** 3 * c).imag,
        },
        "Q4": {"lambda": lam, "|A-2conj(B)|": abs(a - 2 * b.conjugate()), "|C|-|B|": abs(c) - abs(b)},
    }
    passed, residuals = _decide(groups)
    labels = _ordered(passed)
    v1 = -z.A[0] * z.B[1] - z.B[0] * z.A[1]
    result = CenterClass(label=labels[0] if labels else None, labels=labels, residuals=residuals, v1=v1)
    logger.debug(f"复形式判定: {z.model_dump()} -> {result.label} {labels}, v1={v1!r}")
    return result


def complex_to_real_field(z: ComplexFormParams) -> Callable:
    """
    复形式的实坐标形式（已做 y -> -y）

        dx/dt = λx + y + (A1+B1+C1)x² + 2(A2-C2)xy - (A1-B1+C1)y²
        dy/dt = -x + λy - (A2+B2+C2)x² + 2(A1-C1)xy + (A2-B2+C2)y²

    返回的函数接受标量或 numpy 数组。
    """
    lam = z.lam
    (A1, A2), (B1, B2), (C1, C2) = z.A, z.B, z.C

    def field(x, y):
        dx = lam * x + y + (A1 + B1 + C1) * x * x + 2 * (A2 - C2) * x * y - (A1 - B1 + C1) * y * y
        dy = -x + lam * y - (A2 + B2 + C2) * x * x + 2 * (A1 - C1) * x * y + (A2 - B2 + C2) * y * y
        return dx, dy

    return field


def _ratio(num: float, den: float, name: str) -> float:
    if abs(den) < MAP_TOL:
        raise DegenerateMap(f"映射分母 {name} 为零", {"denominator": name, "value": den})
    return num / den


def complex_to_canonical(z: ComplexFormParams, center: CenterClass) -> CanonicalQuadratic:
    """
    复形式参数映射到规范系统系数

    参数:
        z: 复形式参数，需已通过对应类型的判定
        center: classify_complex 的结果（使用其主标签）

    返回:
        CanonicalQuadratic；Q3R 时 a2 = a3 = 0，即可逆系统 (a1, a4)

    异常:
        DegenerateMap: 映射分母绝对值小于 1e-12，或标签为 None
    """
    (A1, A2), (B1, B2), (C1, C2) = z.A, z.B, z.C
    label = center.label

    if label == "Q3LV":
        a1 = _ratio(-2 * (A2 - C2), A2 + C2, "A2+C2")
        a3 = _ratio(-4 * A1, A2 + C2, "A2+C2")
        return CanonicalQuadratic(a1=a1, a2=0.0, a3=a3, a4=-1.0)

    if label == "Q3H":
        a1 = _ratio(-2 * (A2 - C2), 3 * A2 + C2, "3A2+C2")
        a2 = _ratio(4 * A1, 3 * A2 + C2, "3A2+C2")
        return CanonicalQuadratic(a1=a1, a2=a2, a3=0.0, a4=-a1 / 2)

    if label == "Q3R":
        b = B1 - A1 - C1
        a1 = _ratio(2 * (A1 - C1), b, "B1-A1-C1")
        a4 = _ratio(A1 + B1 + C1, b, "B1-A1-C1")
        return CanonicalQuadratic(a1=a1, a2=0.0, a3=0.0, a4=a4)

    if label == "Q4":
        d = B2 - C2
        a1 = _ratio(-2 * (2 * B2 + C2), d, "B2-C2")
        a2 = _ratio(2 * B1, d, "B2-C2")
        a3 = _ratio(10 * B1, d, "B2-C2")
        a4 = _ratio(-(3 * B2 - C2), d, "B2-C2")
        mapped = CanonicalQuadratic(a1=a1, a2=a2, a3=a3, a4=a4)
        residual = a4 + 2 * (1 + a2 * a2)
        if abs(residual) > CLASSIFY_TOL:
            # 映射假定 C1 = -3B1 的旋转规范化
            logger.warning(f"Q4 映射结果不满足 a4 + 2(1+a2²) = 0，残差 {residual!r}，请先做旋转规范化 C1 = -3B1")
        return mapped

    raise DegenerateMap("没有可用的中心类型", {"label": label})
