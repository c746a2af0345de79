"""
中心判定、奇点分布与积分因子校验的测试
"""

import math
import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import numpy as np
import pytest

from module.Classify import (
    CenterClass,
    classify_canonical,
    classify_complex,
    complex_to_canonical,
    jacobian_kind,
    lv_one_zero_kind,
    singularity_layout,
    verify_integrating_factor,
)
from module.Model import CanonicalQuadratic, ComplexFormParams, ReversibleParams, validate_reversible


FACTOR_TOL = 1e-5

CANONICAL = {
    "Q3R": CanonicalQuadratic(a1=-3.0, a2=0.0, a3=0.0, a4=-8 / 3),
    "Q3H": CanonicalQuadratic(a1=2.0, a2=0.5, a3=0.0, a4=-1.0),
    "Q3LV": CanonicalQuadratic(a1=-3.0, a2=0.0, a3=0.7, a4=-1.0),
    "Q4": CanonicalQuadratic(a1=-7.0, a2=1.0, a3=5.0, a4=-4.0),
}

# Q4 的复形式实例满足 A = 2B̄，|C| = |B|，并已旋转到 C1 = -3B1
_C2 = -math.sqrt(0.5 ** 2 - 8 * 0.1 ** 2)
COMPLEX = {
    "Q3LV": ComplexFormParams(A=(1.0, 0.5), B=(0.0, 0.0), C=(0.3, -0.2)),
    "Q3H": ComplexFormParams(A=(0.5, 0.3), B=(-1.0, 0.6), C=(0.2, 0.4)),
    "Q3R": ComplexFormParams(A=(1.0, 0.0), B=(0.5, 0.0), C=(-0.3, 0.0)),
    "Q4": ComplexFormParams(A=(0.2, -1.0), B=(0.1, 0.5), C=(-0.3, _C2)),
}


@pytest.mark.parametrize("label", list(CANONICAL))
def test_classify_canonical(label):
    c = CANONICAL[label]
    center = classify_canonical(c)
    assert center.label == label
    assert verify_integrating_factor(center, c) <= FACTOR_TOL


def test_classify_canonical_none():
    c = CanonicalQuadratic(a1=-2.0, a2=0.3, a3=0.1, a4=0.5)
    center = classify_canonical(c)
    assert center.label is None
    assert center.labels == []
    with pytest.raises(ValueError):
        verify_integrating_factor(center, c)


def test_a3_zero_with_a1_plus_2a4_zero_is_hamiltonian():
    # a3 = 0 且 a1 + 2a4 = 0
    center = classify_canonical(CanonicalQuadratic(a1=-2.0, a2=0.3, a3=0.0, a4=1.0))
    assert center.label == "Q3H"
    assert center.labels == ["Q3H"]


def test_triple_condition_is_reversible():
    # a3 = 5a2, a1 = 5 + 3a4, 3(a4+2)(a4+1)² = (5a4+6)a2²
    center = classify_canonical(CanonicalQuadratic(a1=5.0, a2=1.0, a3=5.0, a4=0.0))
    assert center.label == "Q3R"
    assert center.note is not None
    assert center.residuals["Q3R.a2"] == 1.0


def test_residuals_reported():
    center = classify_canonical(CANONICAL["Q4"])
    assert center.residuals["Q4.a3-5a2"] == 0.0
    assert center.residuals["Q3H.a1+2a4"] == pytest.approx(15.0)


@pytest.mark.parametrize("label", list(COMPLEX))
def test_classify_complex(label):
    z = COMPLEX[label]
    center = classify_complex(z)
    assert center.label == label
    assert verify_integrating_factor(center, z) <= FACTOR_TOL


@pytest.mark.parametrize("label", list(COMPLEX))
def test_complex_to_canonical_keeps_label(label):
    z = COMPLEX[label]
    mapped = complex_to_canonical(z, classify_complex(z))
    assert classify_canonical(mapped).label == label


def test_complex_to_canonical_reversible_values():
    mapped = complex_to_canonical(COMPLEX["Q3R"], classify_complex(COMPLEX["Q3R"]))
    assert (mapped.a2, mapped.a3) == (0.0, 0.0)
    assert mapped.a1 == pytest.approx(-13.0)
    assert mapped.a4 == pytest.approx(-6.0)


def test_first_focus_quantity():
    z = ComplexFormParams(A=(1.0, 2.0), B=(3.0, 4.0))
    assert classify_complex(z).v1 == pytest.approx(-(1.0 * 4.0) - 3.0 * 2.0)


def test_lambda_breaks_every_class():
    z = COMPLEX["Q3LV"].model_copy(update={"lam": 0.1})
    assert classify_complex(z).label is None


# ==================== 奇点 ====================

def test_jacobian_kind():
    assert jacobian_kind(np.array([[0.0, 1.0], [-1.0, 0.0]])) == "center"
    assert jacobian_kind(np.array([[1.0, 0.0], [0.0, -1.0]])) == "saddle"
    assert jacobian_kind(np.array([[-1.0, 0.0], [0.0, -2.0]])) == "node"
    assert jacobian_kind(np.array([[-0.1, 1.0], [-1.0, -0.1]])) == "focus"
    assert jacobian_kind(np.array([[1.0, 2.0], [2.0, 4.0]])) == "degenerate"


def test_layout_two_centers():
    layout = singularity_layout(validate_reversible(ReversibleParams(a1=-3.0, a4=-8 / 3)))
    assert layout.kinds() == ["center", "center"]


def test_layout_with_extra_points():
    layout = singularity_layout(validate_reversible(ReversibleParams(a1=-0.5, a4=-1.0)))
    assert layout.kinds() == ["center", "saddle", "node", "node"]
    extra = layout.equilibria[2]
    assert extra.x == pytest.approx(2.0)
    assert extra.y == pytest.approx(math.sqrt(2.0))
    assert layout.at(1.0, 0.0).kind == "saddle"


@pytest.mark.parametrize("a1, a3, kind", [
    (-3.0, 0.5, "focus"),
    (-1.1, 2.0, "node"),
])
def test_lv_one_zero_kind(a1, a3, kind):
    assert lv_one_zero_kind(a1, a3) == kind


def test_center_class_is_frozen():
    center = CenterClass(label="Q4")
    with pytest.raises(Exception):
        center.label = "Q3R"
