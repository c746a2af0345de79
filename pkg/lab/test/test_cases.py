"""
算例注册表与复现报告的测试
"""

import json
import os
import sys

# 添加父目录到路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import pytest
from pydantic import ValidationError
from rich.console import Console

from module.Cases import (
    CASE_PARAMETERS,
    CaseCheck,
    CaseRegistry,
    CaseReport,
    CheckResult,
    get_registry,
    render_report,
    run_case,
)
from module.Cases.CaseRegistry import _CASES_PATH
from module.Model import Region


def _write_cases(tmp_path, mutate):
    with open(_CASES_PATH, "r", encoding="utf-8") as f:
        raw = json.load(f)
    mutate(raw)
    path = tmp_path / "cases.json"
    path.write_text(json.dumps(raw), encoding="utf-8")
    return CaseRegistry(str(path))


# ==================== 注册表 ====================

def test_registry_is_valid():
    registry = get_registry()
    is_valid, errors = registry.validate_all()
    assert is_valid, errors
    assert registry.labels() == ["A", "B", "C", "D", "E"]


def test_parameters_match_table():
    registry = get_registry()
    for label, (a1, a4) in CASE_PARAMETERS.items():
        spec = registry.get(label)
        assert (spec.a1, spec.a4) == (a1, a4)
    assert registry.get("A").params.a1 == pytest.approx(-30 / 7, rel=1e-15)


def test_get_is_case_insensitive():
    registry = get_registry()
    assert registry.get("a").label == "A"
    assert registry.get(" e ").label == "E"
    with pytest.raises(KeyError):
        registry.get("Z")


def test_perturbation_normalized_by_a10():
    spec = get_registry().get("B")
    q = spec.perturbation(0.01)
    assert q.a10 == 1.0
    assert q.eps == 0.01
    assert q.b01 == pytest.approx(-5611 / 361, rel=1e-15)
    assert q.b11 == pytest.approx(8670 / 361, rel=1e-15)
    assert spec.eps == 10.0
    assert get_registry().get("E").eps is None


def test_wrong_parameters_reported(tmp_path):
    def mutate(raw):
        raw["A"]["a4"] = "-3"

    is_valid, errors = _write_cases(tmp_path, mutate).validate_all()
    assert not is_valid
    assert any("算例 A" in e for e in errors)


def test_missing_case_reported(tmp_path):
    is_valid, errors = _write_cases(tmp_path, lambda raw: raw.pop("C")).validate_all()
    assert not is_valid
    assert any("C" in e for e in errors)


def test_dangling_cycle_reference(tmp_path):
    def mutate(raw):
        for check in raw["D"]["checks"]:
            if check["kind"] == "cycle":
                check["zero"] = "h9*"

    is_valid, errors = _write_cases(tmp_path, mutate).validate_all()
    assert not is_valid
    assert any("h9*" in e for e in errors)


def test_unknown_distribution_reported(tmp_path):
    def mutate(raw):
        raw["E"]["distribution"] = [2, 1]

    is_valid, errors = _write_cases(tmp_path, mutate).validate_all()
    assert not is_valid
    assert any("不可实现" in e for e in errors)


def test_missing_file(tmp_path):
    is_valid, errors = CaseRegistry(str(tmp_path / "absent.json")).validate_all()
    assert not is_valid
    assert "不存在" in errors[0]


# ==================== 单项检查 ====================

def test_check_requires_fields():
    with pytest.raises(ValidationError):
        CaseCheck(name="m", kind="melnikov", region="left", expected=1.0, tol=1e-8, mode="abs")


@pytest.mark.parametrize("body", [
    {"near": 0.0, "far": 1.0},
    {"near": 1e-4, "far": 1.0, "n": 1},
])
def test_scan_check_bounds(body):
    with pytest.raises(ValidationError):
        CaseCheck(name="z", kind="nozero", region="left", **body)


def test_zero_check_needs_ordered_interval():
    with pytest.raises(ValidationError):
        CaseCheck(name="z", kind="zero", region="left", near=1e-4, far=1.0, lo=0.2, hi=0.1, mode="inside")
    with pytest.raises(ValidationError):
        CaseCheck(name="z", kind="zero", region="left", near=1e-4, far=1.0, lo=0.1, hi=0.2, mode="midpoint")


def test_scan_range():
    left = CaseCheck(name="l", kind="nozero", region="left", near=1e-3, far=0.5)
    right = CaseCheck(name="r", kind="nozero", region="right", near=1e-4, far=-1.5)
    assert left.region is Region.LEFT
    assert left.scan_range(0.1) == (0.1 + 1e-3, 0.5)
    assert right.scan_range(-0.2) == (-1.5, -0.2 - 1e-4)


# ==================== 复现 ====================

@pytest.mark.slow
def test_reproduce_case_e():
    report = run_case("E", jobs=1)
    assert report.passed, [r for r in report.results if r.status == "FAIL"]
    assert report.counts()["FAIL"] == 0
    # 检查按 临界值 → μ → 抽样值 → 零点 的顺序运行
    kinds = [r.kind for r in report.results]
    assert kinds.index("level") < kinds.index("mu") < kinds.index("melnikov") < kinds.index("zero")


@pytest.mark.slow
def test_reproduce_case_a_skips_cycles():
    report = run_case("A", jobs=1)
    assert report.passed
    statuses = {r.name: r.status for r in report.results}
    assert statuses["cycle (1,0)"] == "SKIP"
    assert statuses["h1*"] == "PASS"


@pytest.mark.slow
def test_reproduce_case_c_reports_printed_value_as_info():
    report = run_case("C", jobs=1)
    assert report.passed
    statuses = {r.name: r.status for r in report.results}
    assert statuses["mu10 (printed)"] == "INFO"
    assert statuses["mu10"] == "PASS"


def test_render_report_lists_every_check():
    report = CaseReport(label="E", a1="-5", a4="-4", results=[
        CheckResult(name="h00", kind="level", expected="0 = 0.0", computed=0.0, tol=1e-14, status="PASS"),
        CheckResult(name="h7*", kind="zero", expected="(0.0, 0.1)", status="FAIL", detail="扫描区间内没有零点"),
    ])
    console = Console(record=True, width=160)
    render_report(report, console)
    text = console.export_text()
    assert "h00" in text
    assert "h7*" in text
    assert "PASS 1, FAIL 1, INFO 0, SKIP 0" in text
    assert not report.passed
