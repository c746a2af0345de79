"""
展开系数与小极限环分布求解的测试
"""

import math
import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from Data.Error import DegenerateParameters, ImpossibleDistribution
from module.Hopf import (
    distribution,
    first_nonzero,
    mu02_reduced,
    mu10_reduced_20,
    mu_coefficients,
    on_line03,
    on_line30,
)
from module.Model import Perturbation, ReversibleParams


PI = math.pi


# ==================== 算例数值 ====================

def test_case_e_coefficients():
    mu = mu_coefficients(ReversibleParams(a1=-5.0, a4=-4.0), Perturbation(a10=1.0, b01=-1.0, b11=26 / 3))
    assert mu.mu0[0] == 0.0
    assert mu.mu0[1] == pytest.approx(0.0, abs=1e-10)
    assert mu.mu0[2] == pytest.approx(-130 * PI / 3, rel=1e-10)
    assert mu.mu1[0] == pytest.approx(-65 * PI / 12, rel=1e-12)


def test_case_c_coefficients():
    p = ReversibleParams(a1=-4.0, a4=-18 / 5)
    mu = mu_coefficients(p, Perturbation(a10=1.0, b01=-1.0, b11=392 / 65))
    assert mu.mu0[2] == pytest.approx(-1344 * PI / 125, rel=1e-10)
    assert mu.mu1[0] == pytest.approx(-896 * math.sqrt(3) * PI / 585, rel=1e-12)
    assert mu02_reduced(p.a1, p.a4) == pytest.approx(mu.mu0[2], rel=1e-10)
    assert mu10_reduced_20(p.a1, p.a4) == pytest.approx(mu.mu1[0], rel=1e-12)


def test_mu1_absent_for_single_center():
    mu = mu_coefficients(ReversibleParams(a1=-0.5, a4=-1.0), Perturbation(a10=1.0))
    assert mu.mu1 is None
    assert mu.as_dict()["mu10"] is None


def test_linear_homogeneity():
    p = ReversibleParams(a1=-4.0, a4=-18 / 5)
    q = Perturbation(a10=1.0, b01=0.3, b11=-2.0)
    base = mu_coefficients(p, q)
    scaled = mu_coefficients(p, q.scaled(-2.5))
    for a, b in zip(base.mu0 + base.mu1, scaled.mu0 + scaled.mu1):
        assert b == pytest.approx(-2.5 * a, rel=1e-10, abs=1e-12)


def test_first_nonzero():
    assert first_nonzero([0.0, 0.0, 3.0, 1.0]) == 2
    assert first_nonzero([0.0, 0.0, 0.0, 0.0]) is None
    assert first_nonzero([1e-20, 5.0]) == 1


# ==================== 分布 ====================

def test_three_zero_case_a():
    d = distribution(ReversibleParams(a1=-30 / 7, a4=-1.5), (3, 0))
    assert d.a4 == pytest.approx(-65 / 21, rel=1e-14)
    assert d.b01 == -1.0
    assert d.b11 == pytest.approx(230 / 21, rel=1e-12)
    assert d.mu.mu0[3] == pytest.approx(139150000 * PI / 453789, rel=1e-10)
    assert d.mu.mu1[0] == pytest.approx(-2500 * math.sqrt(161) * PI / 3703, rel=1e-12)
    assert d.schedule[0].startswith("a4")
    # 直线 a4 = (a1-5)/3 上的显式值
    assert on_line30(-30 / 7)["mu03"] == pytest.approx(d.mu.mu0[3], rel=1e-9)
    assert on_line30(-30 / 7)["mu10"] == pytest.approx(d.mu.mu1[0], rel=1e-11)


def test_zero_three_case_b():
    d = distribution(ReversibleParams(a1=-70 / 51, a4=-1.0), (0, 3))
    assert d.a4 == pytest.approx(-55 / 51, rel=1e-14)
    assert d.b01 == pytest.approx(-5611 / 361, rel=1e-12)
    assert d.b11 == pytest.approx(8670 / 361, rel=1e-12)
    assert d.mu.mu0[0] == pytest.approx(-10500 * PI / 361, rel=1e-12)
    expected = 4561235000 / 565036352721 * (51 / 19) ** (2 / 7) * PI
    assert d.mu.mu1[3] == pytest.approx(expected, rel=1e-10)
    assert on_line03(-70 / 51)["mu13"] == pytest.approx(expected, rel=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.floats(-10.0, -1.01, exclude_min=True), st.sampled_from([1.0, -0.5, 3.0]))
def test_three_zero_chain_exact(a1, a10):
    assume(abs(2 * a1 + 5) > 1e-3 and abs(a1 + 10) > 1e-3)
    d = distribution(ReversibleParams(a1=a1, a4=-2.0), (3, 0), a10=a10)
    for j in range(3):
        assert abs(d.mu.mu0[j]) <= 1e-12 * abs(a10)
    assert abs(d.mu.mu0[3]) > 0


@settings(max_examples=50, deadline=None)
@given(st.floats(-10.0, -1.01, exclude_min=True), st.sampled_from([1.0, -0.5, 3.0]))
def test_zero_three_chain_exact(a1, a10):
    assume(abs(3 * a1 + 5) > 1e-3 and abs(a1 + 10 / 9) > 1e-3)
    d = distribution(ReversibleParams(a1=a1, a4=-2.0), (0, 3), a10=a10)
    for j in range(3):
        assert abs(d.mu.mu1[j]) <= 1e-12 * abs(a10)


def test_chain_endpoint_a1_minus_ten_is_degenerate():
    # a4 = (a1-5)/3 = -5 时 a1 = 2a4
    with pytest.raises(DegenerateParameters):
        distribution(ReversibleParams(a1=-10.0, a4=-2.0), (3, 0))


@pytest.mark.parametrize("target", [(2, 1), (1, 2), (4, 0)])
def test_impossible_distribution(target):
    with pytest.raises(ImpossibleDistribution) as info:
        distribution(ReversibleParams(a1=-3.0, a4=-2.5), target)
    assert info.value.reason.startswith(f"impossible distribution {target}")
    assert "shared_factor" in info.value.details
    if target != (4, 0):
        assert "(2,1) and (1,2) do not exist" in info.value.reason
        assert "a1(a1-a4)(a1+2a4)" in info.value.reason


def test_two_zero_and_zero_two():
    p = ReversibleParams(a1=-4.0, a4=-18 / 5)
    d20 = distribution(p, (2, 0))
    assert d20.b11 == pytest.approx(392 / 65, rel=1e-12)
    assert d20.mu.mu0[0] == 0.0
    assert d20.mu.mu0[1] == pytest.approx(0.0, abs=1e-10)

    p = ReversibleParams(a1=-4 / 3, a4=-6 / 5)
    d02 = distribution(p, (0, 2))
    assert d02.b01 == pytest.approx(-513 / 65, rel=1e-12)
    assert d02.b11 == pytest.approx(1176 / 65, rel=1e-12)
    assert d02.mu.mu1[2] == pytest.approx(-(448 / 30375) * 3 ** 0.9 * PI, rel=1e-10)


@pytest.mark.parametrize("a4, route, b11", [
    (-2.5, "general", 4.0),
    (-1.0, "a4=-1", 2.5),
    (-2.0, "a1-a4+1=0", 3.5),
])
def test_one_one_routes(a4, route, b11):
    d = distribution(ReversibleParams(a1=-3.0, a4=a4), (1, 1))
    assert d.route == route
    assert d.b01 == -1.0
    assert d.b11 == pytest.approx(b11, rel=1e-14)
    assert d.mu.mu0[0] == 0.0
    assert d.mu.mu1[0] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("target", [(1, 0), (0, 1), (0, 0)])
def test_low_distributions(target):
    d = distribution(ReversibleParams(a1=-4.0, a4=-18 / 5), target)
    assert (d.n0, d.n1) == target
    assert all(abs(v) > 1e-12 for v in d.witnesses.values())


def test_three_zero_witness():
    with pytest.raises(DegenerateParameters) as info:
        distribution(ReversibleParams(a1=-2.5, a4=-2.0), (3, 0))
    assert info.value.reason == "(2a1+5)·a10=0"


def test_requires_two_centers():
    with pytest.raises(DegenerateParameters):
        distribution(ReversibleParams(a1=-0.5, a4=-2.0), (0, 3))
