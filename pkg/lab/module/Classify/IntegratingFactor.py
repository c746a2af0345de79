# -*- coding: utf-8 -*-
"""
积分因子的数值校验

积分因子统一写成 γ = |base(x, y)|^exponent。校验时在 [-0.8, 0.8]² 上取
500 个 Halton 点，用步长 1e-6 的中心差分计算 (γP, γQ) 的散度，跳过
|base| < ZERO_SET_GUARD 的点（零点集附近差分不可靠）。

复形式 Q4 因子中 (x² - y²) 项取负号，这一符号由散度检验确定。
"""

from typing import Callable, Tuple, Union

import numpy as np
from scipy.stats import qmc

from PublicTools import logger
from module.Integrable import lv_g, q4_g
from module.Model import CanonicalQuadratic, ComplexFormParams
from .CenterClassifier import CenterClass, complex_to_real_field


SAMPLE_COUNT = 500
SAMPLE_BOX = 0.8
FD_STEP = 1e-6
ZERO_SET_GUARD = 0.25

Factor = Tuple[Callable, float]


def canonical_field(c: CanonicalQuadratic) -> Callable:
    """规范系统 dx/dt = y + a1xy + a2y², dy/dt = -x + x² + a3xy + a4y²"""

    def field(x, y):
        return (y + c.a1 * x * y + c.a2 * y * y,
                -x + x * x + c.a3 * x * y + c.a4 * y * y)

    return field


# ==================== 因子表 ====================

def canonical_factor(label: str, c: CanonicalQuadratic) -> Factor:
    """
    规范系统的积分因子 (base, exponent)

    Q3R:  |1 + a1x|^(-(a1+2a4)/a1)
    Q3H:  1
    Q3LV: |g|^-1，g = (1+a1x)[(x-1)² + a3(x-1)y - (1+a1)y²]
    Q4:   |g|^(-5/2)，g = 1 - 2(1+2a2²)x - 2a2y + (1+4a2²)(x+a2y)²
    """
    if label == "Q3R":
        return (lambda x, y: 1 + c.a1 * x + 0 * y), -(c.a1 + 2 * c.a4) / c.a1
    if label == "Q3H":
        return (lambda x, y: 1 + 0 * x * y), 0.0
    if label == "Q3LV":
        return (lambda x, y: lv_g(x, y, c.a1, c.a3)), -1.0
    if label == "Q4":
        return (lambda x, y: q4_g(x, y, c.a2)), -2.5
    raise ValueError(f"未知的中心类型: {label}")


def complex_factor(label: str, z: ComplexFormParams) -> Factor:
    """复形式（实坐标）的积分因子 (base, exponent)"""
    (A1, A2), (B1, B2), (C1, C2) = z.A, z.B, z.C

    if label == "Q3LV":
        def base(x, y):
            return (1 + 4 * (A2 * x - A1 * y)
                    + 4 * (A1 * C2 + A2 * C1 - 2 * A1 * A2) * x * y
                    + ((A1 + C1) * (A1 - 3 * C1) + (A2 + C2) * (5 * A2 - 3 * C2)) * x * x
                    + ((A2 + C2) * (A2 - 3 * C2) + (A1 + C1) * (5 * A1 - 3 * C1)) * y * y
                    + 2 * (A1 ** 2 + A2 ** 2 - C1 ** 2 - C2 ** 2)
                    * ((A2 + C2) * x ** 3 - (A1 + C1) * y ** 3 - (A1 - 3 * C1) * x * x * y + (A2 - 3 * C2) * x * y * y))
        return base, -1.0

    if label == "Q3H":
        return (lambda x, y: 1 + 0 * x * y), 0.0

    if label == "Q3R":
        return (lambda x, y: 1 - 2 * (A1 - C1) * y + 0 * x), -(2 * A1 + B1) / (A1 - C1)

    if label == "Q4":
        def base(x, y):
            return (1 - 4 * (B2 * x + B1 * y)
                    + 2 * (B1 ** 2 + B2 ** 2) * (x * x + y * y)
                    - 2 * (B1 * C1 + B2 * C2) * (x * x - y * y)
                    + 4 * (B1 * C2 - B2 * C1) * x * y)
        return base, -2.5

    raise ValueError(f"未知的中心类型: {label}")


# ==================== 散度校验 ====================

def sample_points(n: int = SAMPLE_COUNT) -> np.ndarray:
    """[-0.8, 0.8]² 上固定的 Halton 序列（无扰乱，结果可复现）"""
    sampler = qmc.Halton(d=2, scramble=False)
    sampler.fast_forward(1)
    return qmc.scale(sampler.random(n), [-SAMPLE_BOX] * 2, [SAMPLE_BOX] * 2)


def divergence(field: Callable, factor: Factor, x: np.ndarray, y: np.ndarray, step: float = FD_STEP) -> np.ndarray:
    """(γP, γQ) 散度的中心差分"""
    base, exponent = factor

    def weighted(xs, ys):
        p, q = field(xs, ys)
        g = np.abs(base(xs, ys)) ** exponent
        return g * p, g * q

    px_hi, _ = weighted(x + step, y)
    px_lo, _ = weighted(x - step, y)
    _, qy_hi = weighted(x, y + step)
    _, qy_lo = weighted(x, y - step)
    return (px_hi - px_lo) / (2 * step) + (qy_hi - qy_lo) / (2 * step)


def verify_integrating_factor(center: CenterClass, params: Union[ComplexFormParams, CanonicalQuadratic]) -> float:
    """
    检验积分因子：返回采样点上散度绝对值的最大值（正确的因子应不超过 1e-5）

    参数:
        center: 判定结果，label 不能为 None
        params: 复形式或规范形式参数，决定使用哪一组因子与向量场

    返回:
        最大散度；所有点都落在零点集附近时返回 0.0
    """
    if center.label is None:
        raise ValueError("label 为 None 时没有积分因子")

    if isinstance(params, ComplexFormParams):
        field = complex_to_real_field(params)
        factor = complex_factor(center.label, params)
    else:
        field = canonical_field(params)
        factor = canonical_factor(center.label, params)

    pts = sample_points()
    x, y = pts[:, 0], pts[:, 1]
    keep = np.ones_like(x, dtype=bool)
    # 差分模板的五个点都要远离零点集
    for dx, dy in ((0, 0), (FD_STEP, 0), (-FD_STEP, 0), (0, FD_STEP), (0, -FD_STEP)):
        keep &= np.abs(factor[0](x + dx, y + dy)) >= ZERO_SET_GUARD
    skipped = int(np.count_nonzero(~keep))

    if not keep.any():
        logger.warning(f"{center.label}: 全部采样点都在零点集附近")
        return 0.0

    div = divergence(field, factor, x[keep], y[keep])
    worst = float(np.max(np.abs(div)))
    logger.debug(f"积分因子校验 {center.label}: 最大散度 {worst:.3e}，跳过 {skipped} 个点")
    return worst
