# -*- coding: utf-8 -*-
"""
扰动系统的数值积分

使用 scipy 的 RK45（Dormand–Prince 5(4)）逐步推进，以便在每一步检查
奇异直线与逃逸条件，并统计步数、拒绝步数与局部误差估计。
"""

from typing import Callable, Iterator, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import RK45

from Data.Error import LabError, StepFailure
from PublicTools import get_settings, logger
from module.Integrable import critical_levels, first_integral, radicand, turning_points, vector_field
from module.Model import LevelSet, Perturbation, Region, ReversibleParams


SINGULAR_GUARD = 1e-6
ESCAPE_RADIUS = 1e3
ESCAPE_FACTOR = 4.0
EXTENT_SAMPLES = 257
ATOL_SCALE = 1e-2
TOL_RANGE = (1e-13, 1e-6)

TrajectoryStatus = Literal["completed", "singular_line", "escaped"]


class Trajectory(BaseModel):
    """
    轨线采样

    属性:
        t, x, y: 每个接受步的采样（t 严格递增）
        steps: 接受步数
        rejected: 拒绝步数（由函数调用次数推算）
        max_error: 局部误差估计的最大值
        status: completed / singular_line / escaped
    """

    model_config = ConfigDict(frozen=True)

    t: List[float]
    x: List[float]
    y: List[float]
    steps: int
    rejected: int
    max_error: float
    status: TrajectoryStatus = "completed"

    def rows(self) -> List[Tuple[float, float, float]]:
        return list(zip(self.t, self.x, self.y))


def make_rhs(p: ReversibleParams, q: Perturbation) -> Callable:
    def rhs(t, state):
        return np.array(vector_field(state[0], state[1], p, q))

    return rhs


def make_solver(p: ReversibleParams, q: Perturbation, x0: float, y0: float, t0: float, t_bound: float,
                tol: float) -> RK45:
    return RK45(make_rhs(p, q), t0, np.array([x0, y0], dtype=float), t_bound,
                rtol=tol, atol=tol * ATOL_SCALE)


def check_tol(tol: Optional[float]) -> float:
    tol = tol or get_settings().ode_tol
    lo, hi = TOL_RANGE
    if not lo <= tol <= hi:
        raise ValueError(f"tol 必须位于 [{lo}, {hi}]，当前值: {tol}")
    return tol


def oval_extent(p: ReversibleParams, x0: float, y0: float) -> Optional[float]:
    """
    过 (x0, y0) 的未扰动卵形线的尺度 max(|x|) + max(|y|)

    返回:
        不在闭卵形线上（中心附近、不可容许或区域内没有中心）时返回 None
    """
    try:
        region = Region.from_x(x0, p.a1)
        levels = critical_levels(p)
        ls = LevelSet.make(first_integral(x0, y0, p), region, levels)
        tp = turning_points(ls, p, levels)
    except LabError:
        return None
    xs = np.linspace(tp.x_min, tp.x_max, EXTENT_SAMPLES)
    y_max = float(np.sqrt(np.max(np.clip(radicand(xs, ls.h, region, p), 0.0, None))))
    return max(abs(tp.x_min), abs(tp.x_max)) + max(y_max, abs(y0))


def escape_radius(p: ReversibleParams, x0: float, y0: float) -> float:
    """逃逸判据 |x| + |y| 的上界：卵形线尺度的 ESCAPE_FACTOR 倍，不小于 ESCAPE_RADIUS"""
    extent = oval_extent(p, x0, y0)
    if extent is None:
        return ESCAPE_RADIUS
    return max(ESCAPE_RADIUS, ESCAPE_FACTOR * extent)


def steps(solver: RK45) -> Iterator[Tuple[float, np.ndarray, float, np.ndarray, float]]:
    """
    逐步推进，产出 (t_prev, state_prev, t, state, err)

    异常:
        StepFailure: 步长下溢
    """
    while solver.status == "running":
        t_prev, state_prev = solver.t, solver.y.copy()
        message = solver.step()
        if solver.status == "failed":
            raise StepFailure(str(message), {"t": t_prev, "x": float(state_prev[0]), "y": float(state_prev[1])})
        # Dormand–Prince 的嵌入误差估计
        err = float(np.max(np.abs(solver.h_previous * (solver.K.T @ solver.E))))
        yield t_prev, state_prev, solver.t, solver.y, err


def rejected_steps(solver: RK45, accepted: int) -> int:
    # 初值与初始步长各用一次函数调用，每次尝试 6 次
    return max(0, (solver.nfev - 2) // 6 - accepted)


def integrate(p: ReversibleParams, q: Perturbation, x0: float, y0: float, t_max: float,
              tol: Optional[float] = None) -> Trajectory:
    """
    积分扰动系统

    参数:
        p, q: 参数与扰动
        x0, y0: 初值（不能在奇异直线上）
        t_max: 终止时间
        tol: 每步相对误差，范围 [1e-13, 1e-6]，None 时取 QLC_ODE_TOL

    返回:
        Trajectory；靠近奇异直线（距离 < 1e-6）或 |x|+|y| 超过 escape_radius 时提前终止并标记

    异常:
        SingularLine: 初值在奇异直线上
        StepFailure: 步长下溢
    """
    tol = check_tol(tol)
    Region.from_x(x0, p.a1)
    x_s = p.singular_x
    radius = escape_radius(p, x0, y0)

    solver = make_solver(p, q, x0, y0, 0.0, t_max, tol)
    ts, xs, ys = [0.0], [float(x0)], [float(y0)]
    max_error = 0.0
    status = "completed"
    for _, _, t, state, err in steps(solver):
        ts.append(float(t))
        xs.append(float(state[0]))
        ys.append(float(state[1]))
        max_error = max(max_error, err)
        if abs(state[0] - x_s) < SINGULAR_GUARD:
            status = "singular_line"
            break
        if abs(state[0]) + abs(state[1]) > radius:
            status = "escaped"
            break

    accepted = len(ts) - 1
    traj = Trajectory(t=ts, x=xs, y=ys, steps=accepted, rejected=rejected_steps(solver, accepted),
                      max_error=max_error, status=status)
    logger.debug(f"积分结束: t={ts[-1]!r}, steps={accepted}, rejected={traj.rejected}, status={status}")
    return traj
