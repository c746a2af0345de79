"""
扰动系统积分、回归映射与大极限环定位的测试
"""

import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import numpy as np
import pytest

from Data.Error import EscapedAnnulus, NoSignChange, SingularLine
from module.Cases import get_registry
from module.Integrable import critical_levels, first_integral, section_abscissa, turning_points
from module.Model import LevelSet, Perturbation, Region, ReversibleParams
from module.ODESim import (
    center_region,
    escape_radius,
    integrate,
    level_change,
    locate_cycle,
    return_map,
    section_side,
)
from module.ODESim.ReturnMap import return_tol


ODE_TOL = 1e-12
TIGHT_TOL = 1e-13

E_PARAMS = ReversibleParams(a1=-5.0, a4=-4.0)
C_PARAMS = ReversibleParams(a1=-4.0, a4=-18 / 5)
E_H10 = -2 ** (-21 / 5)


def _perturbation(label, eps):
    return get_registry().get(label).perturbation(eps)


def _section_points(p, region, count):
    """在区域内部均匀取水平值，返回截面上的起点"""
    levels = critical_levels(p)
    base = levels.bound(region)
    far = base + 0.1 if region is Region.LEFT else base - 0.5
    points = []
    for h in np.linspace(base, far, count + 2)[1:-1]:
        ls = LevelSet.make(float(h), region, levels)
        points.append(section_abscissa(ls, p, levels))
    return points


# ==================== 积分 ====================

def test_trajectory_invariants():
    levels = critical_levels(E_PARAMS)
    x0 = section_abscissa(LevelSet.make(0.05, Region.LEFT, levels), E_PARAMS, levels)
    traj = integrate(E_PARAMS, Perturbation(eps=1e-2, a10=1.0), x0, 0.0, 5.0, tol=1e-9)
    assert traj.status == "completed"
    assert traj.t[0] == 0.0
    assert traj.t[-1] == pytest.approx(5.0)
    assert np.all(np.diff(traj.t) > 0)
    assert len(traj.t) == len(traj.x) == len(traj.y) == traj.steps + 1
    assert traj.rejected >= 0
    assert traj.max_error >= 0
    assert traj.rows()[0] == (0.0, x0, 0.0)


def test_start_on_singular_line():
    with pytest.raises(SingularLine):
        integrate(ReversibleParams(a1=-4.0, a4=-1.0), Perturbation(), 0.25, 0.0, 1.0)


@pytest.mark.parametrize("tol", [1e-14, 1e-5])
def test_tol_out_of_range(tol):
    with pytest.raises(ValueError):
        integrate(E_PARAMS, Perturbation(), 0.1, 0.0, 1.0, tol=tol)


def test_escape_radius_follows_oval_size():
    p = get_registry().get("D").params
    levels = critical_levels(p)
    tp = turning_points(LevelSet.make(12.6198, Region.LEFT, levels), p, levels)
    assert tp.x_min < -5000
    assert escape_radius(p, tp.x_min, 0.0) >= 4 * abs(tp.x_min)
    # 中心不在任何闭卵形线上，退回默认值
    assert escape_radius(E_PARAMS, 0.0, 0.0) == 1e3


def test_large_oval_start_does_not_escape():
    levels = critical_levels(E_PARAMS)
    x0 = section_abscissa(LevelSet.make(E_H10 - 0.8, Region.RIGHT, levels), E_PARAMS, levels)
    assert x0 > 1e3
    traj = integrate(E_PARAMS, Perturbation(), x0, 0.0, 1.0, tol=1e-9)
    assert traj.status == "completed"


def test_return_tolerance_is_tighter():
    assert return_tol(1e-12) == pytest.approx(1e-13)
    assert return_tol(1e-13) == 1e-13


def test_section_side():
    # 奇异直线在 x = 0.2，位于原点右侧
    assert section_side(E_PARAMS, "origin") == -1.0
    assert section_side(E_PARAMS, "one_zero") == 1.0
    assert center_region("origin") is Region.LEFT
    assert center_region("one_zero") is Region.RIGHT


def test_return_map_rejects_wrong_side():
    with pytest.raises(EscapedAnnulus):
        return_map(E_PARAMS, Perturbation(), 0.1, "origin", ODE_TOL)


@pytest.mark.slow
@pytest.mark.parametrize("p", [E_PARAMS, C_PARAMS])
@pytest.mark.parametrize("region", [Region.LEFT, Region.RIGHT])
def test_unperturbed_conservation(p, region):
    for x0 in _section_points(p, region, 10):
        h0 = first_integral(x0, 0.0, p)
        traj = integrate(p, Perturbation(), x0, 0.0, 100.0, tol=TIGHT_TOL)
        assert traj.status == "completed"
        drift = max(abs(first_integral(x, y, p) - h0) for x, y in zip(traj.x, traj.y))
        assert drift <= 1e-9


@pytest.mark.slow
@pytest.mark.parametrize("center", ["origin", "one_zero"])
def test_unperturbed_return_identity(center):
    region = center_region(center)
    for x0 in _section_points(E_PARAMS, region, 10):
        assert return_map(E_PARAMS, Perturbation(), x0, center, ODE_TOL) == pytest.approx(x0, abs=1e-9)


# ==================== 回归映射 ====================

@pytest.mark.slow
def test_level_change_sign_follows_melnikov():
    q = Perturbation(eps=1e-3, a10=1.0, b01=-1.0, b11=26 / 3)
    levels = critical_levels(E_PARAMS)

    x_left = section_abscissa(LevelSet.make(0.1, Region.LEFT, levels), E_PARAMS, levels)
    assert level_change(E_PARAMS, q, x_left, "origin", ODE_TOL) > 0

    x_right = section_abscissa(LevelSet.make(E_H10 - 0.8, Region.RIGHT, levels), E_PARAMS, levels)
    assert level_change(E_PARAMS, q, x_right, "one_zero", ODE_TOL) > 0


def test_no_sign_change_without_perturbation():
    with pytest.raises(NoSignChange):
        locate_cycle(E_PARAMS, Perturbation(a10=1.0), "origin", 0.05, ODE_TOL)


# ==================== 极限环 ====================

@pytest.mark.slow
@pytest.mark.parametrize("label,center,h_star,stability", [
    ("A", "one_zero", -0.92503632535, "attracting"),
    ("D", "origin", 12.61978099495, None),
])
def test_cycle_near_melnikov_zero(label, center, h_star, stability):
    p = get_registry().get(label).params
    full = locate_cycle(p, _perturbation(label, 1e-3), center, h_star, ODE_TOL)
    assert full.h_assoc == pytest.approx(h_star, abs=0.05)
    assert full.residual <= 1e-8
    assert full.period > 0
    if stability is not None:
        assert full.stability == stability

    half = locate_cycle(p, _perturbation(label, 5e-4), center, h_star, ODE_TOL)
    d_full = abs(full.h_assoc - h_star)
    d_half = abs(half.h_assoc - h_star)
    assert d_half <= 0.6 * d_full + 1e-6
