"""
领域类型与参数校验的测试
"""

import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from pydantic import ValidationError

from Data.Error import DegenerateParameters, NoOval, SingularLine
from module.Model import (
    CriticalLevels,
    LevelSet,
    Perturbation,
    Region,
    ReversibleParams,
    validate_reversible,
)


@pytest.mark.parametrize("a1, a4, reason", [
    (-3.0, 0.0, "a4=0"),
    (-2.0, -2.0, "a1=a4"),
    (-4.0, -2.0, "a1=2·a4"),
    (0.0, -1.0, "a1=0"),
    (-1.0, -2.0, "a1=-1"),
])
def test_degenerate_parameters(a1, a4, reason):
    with pytest.raises(DegenerateParameters) as info:
        validate_reversible(ReversibleParams(a1=a1, a4=a4))
    assert info.value.reason == reason


@pytest.mark.parametrize("a1, a4, expected", [
    (-30 / 7, -65 / 21, True),
    (-3.0, -8 / 3, True),
    (-0.5, -1.0, False),
    (-3.0, 1.0, False),
])
def test_two_center_flag(a1, a4, expected):
    assert validate_reversible(ReversibleParams(a1=a1, a4=a4)).two_center is expected


@given(st.floats(-20, 20), st.floats(-20, 20))
def test_validate_is_idempotent(a1, a4):
    for residual in (a4, a1 - a4, a1 - 2 * a4, a1, a1 + 1):
        assume(abs(residual) > 1e-9)
    p = ReversibleParams(a1=a1, a4=a4)
    once = validate_reversible(p)
    assert validate_reversible(once) == once == p


def test_non_finite_rejected():
    with pytest.raises(ValidationError):
        ReversibleParams(a1=float("nan"), a4=-1.0)
    with pytest.raises(ValidationError):
        Perturbation(eps=float("inf"))


def test_negative_eps_rejected():
    with pytest.raises(ValidationError):
        Perturbation(eps=-1e-3)


def test_perturbation_normalized():
    q = Perturbation(eps=0.1, a10=2.0, b01=-2.0, b11=4.0).normalized()
    assert (q.eps, q.a10, q.b01, q.b11) == (0.1, 1.0, -1.0, 2.0)
    with pytest.raises(DegenerateParameters):
        Perturbation(a10=0.0, b01=1.0).normalized()


def test_region_from_x():
    assert Region.from_x(0.0, -4.0) is Region.LEFT
    assert Region.from_x(1.0, -4.0) is Region.RIGHT
    with pytest.raises(SingularLine):
        Region.from_x(0.25, -4.0)


def test_level_set_admissibility():
    levels = CriticalLevels(h00=0.1, h10=-0.2)
    with pytest.raises(NoOval):
        LevelSet.make(0.05, Region.LEFT, levels)
    with pytest.raises(NoOval):
        LevelSet.make(-0.1, Region.RIGHT, levels)

    ls = LevelSet.make(0.2, "left", levels)
    assert ls.region is Region.LEFT
    assert ls.distance(levels) == pytest.approx(0.1)
    assert ls.interior(levels)
    assert not LevelSet(h=-0.2, region=Region.RIGHT).interior(levels)


@pytest.mark.parametrize("h,region", [(0.1, Region.LEFT), (-0.2, Region.RIGHT)])
def test_level_set_rejects_critical_level(h, region):
    # 临界值对应中心本身
    with pytest.raises(NoOval):
        LevelSet.make(h, region, CriticalLevels(h00=0.1, h10=-0.2))
    nudged = h + 1e-12 if region is Region.LEFT else h - 1e-12
    assert LevelSet.make(nudged, region, CriticalLevels(h00=0.1, h10=-0.2)).h == nudged
