# -*- coding: utf-8 -*-
"""
算例复现

按 临界值 → μ → M 抽样值 → 扫描 / 零点 →（可选）极限环 的顺序逐项核对，
每项给出 PASS / FAIL / INFO / SKIP。info 级别的检查只报告不失败；
极限环检查只有在 cycles=True 时运行，否则为 SKIP。

典型用法：
    >>> report = run_case("E")
    >>> report.passed
    True
    >>> render_report(report)
"""

import math
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict
from rich.console import Console
from rich.table import Table

from Data.Error import LabError
from PublicTools import get_settings, logger
from module.Hopf import mu_coefficients
from module.Integrable import critical_levels
from module.Melnikov import brackets, level_at, melnikov, scan, zeros
from module.Model import CriticalLevels, Perturbation, ReversibleParams
from module.ODESim import locate_cycle
from .CaseRegistry import CaseCheck, CaseSpec, get_registry


Status = Literal["PASS", "FAIL", "INFO", "SKIP"]

_STYLES = {"PASS": "green", "FAIL": "bold red", "INFO": "yellow", "SKIP": "dim"}


class CheckResult(BaseModel):
    """
    单项检查结果

    属性:
        name / kind: 检查名与类别
        expected: 期望值的显示文本
        computed: 计算值（失败时可能为 None）
        tol: 容差
        status: PASS / FAIL / INFO / SKIP
        detail: 附加说明（错误原因、找到的零点数等）
    """

    model_config = ConfigDict(frozen=True)

    name: str
    kind: str
    expected: str
    computed: Optional[float] = None
    tol: Optional[float] = None
    status: Status
    detail: Optional[str] = None


class CaseReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    a1: str
    a4: str
    results: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.status != "FAIL" for r in self.results)

    def counts(self) -> Dict[str, int]:
        out = {"PASS": 0, "FAIL": 0, "INFO": 0, "SKIP": 0}
        for r in self.results:
            out[r.status] += 1
        return out


class _Context:
    """一次复现中共享的中间量"""

    def __init__(self, spec: CaseSpec, cycles: bool, jobs: Optional[int], tol: Optional[float]):
        self.spec = spec
        self.cycles = cycles
        self.jobs = jobs
        self.tol = tol
        self.p: ReversibleParams = spec.params
        self.q: Perturbation = spec.perturbation()
        self.levels: CriticalLevels = critical_levels(self.p)
        self.mu = mu_coefficients(self.p, self.q).as_dict()
        self.found: Dict[str, float] = {}


# ==================== 比较 ====================

def _close(computed: float, expected: float, tol: float, mode: str) -> bool:
    if computed is None or not math.isfinite(computed):
        return False
    if mode == "rel":
        return abs(computed - expected) <= tol * abs(expected)
    return abs(computed - expected) <= tol


def _verdict(check: CaseCheck, ok: bool) -> Status:
    if ok:
        return "PASS"
    return "INFO" if check.severity == "info" else "FAIL"


def _expected_text(check: CaseCheck) -> str:
    if check.kind == "zero":
        return f"({check.lo!r}, {check.hi!r})"
    if check.kind == "nozero":
        return "无变号"
    if check.kind == "cycle":
        return f"h ≈ {check.zero}"
    if check.display:
        return f"{check.display} = {check.expected!r}"
    return repr(check.expected)


# ==================== 各类检查 ====================

def _check_value(check: CaseCheck, ctx: _Context) -> CheckResult:
    if check.kind == "level":
        computed = getattr(ctx.levels, check.target)
    elif check.kind == "mu":
        computed = ctx.mu.get(check.target)
    else:
        ls = level_at(check.h, check.region, ctx.p, ctx.levels)
        computed = melnikov(ls, ctx.p, ctx.q, ctx.tol, ctx.levels)
    ok = computed is not None and _close(computed, check.expected, check.tol, check.mode)
    return CheckResult(
        name=check.name, kind=check.kind, expected=_expected_text(check),
        computed=computed, tol=check.tol, status=_verdict(check, ok),
    )


def _check_zero(check: CaseCheck, ctx: _Context) -> CheckResult:
    h_lo, h_hi = check.scan_range(ctx.levels.bound(check.region))
    found = zeros(check.region, h_lo, h_hi, check.n, ctx.p, ctx.q, ctx.jobs, ctx.tol)
    if not found:
        return CheckResult(
            name=check.name, kind=check.kind, expected=_expected_text(check),
            tol=check.tol, status=_verdict(check, False), detail="扫描区间内没有零点",
        )

    if check.mode == "midpoint":
        mid = 0.5 * (check.lo + check.hi)
        h_star = min((z.h_star for z in found), key=lambda h: abs(h - mid))
        ok = abs(h_star - mid) <= check.tol
    else:
        inside = [z.h_star for z in found if check.lo < z.h_star < check.hi]
        h_star = inside[0] if inside else found[0].h_star
        ok = bool(inside)

    ctx.found[check.name] = h_star
    return CheckResult(
        name=check.name, kind=check.kind, expected=_expected_text(check),
        computed=h_star, tol=check.tol, status=_verdict(check, ok),
        detail=f"共 {len(found)} 个零点",
    )


def _check_nozero(check: CaseCheck, ctx: _Context) -> CheckResult:
    h_lo, h_hi = check.scan_range(ctx.levels.bound(check.region))
    samples = scan(check.region, h_lo, h_hi, check.n, ctx.p, ctx.q, ctx.jobs, ctx.tol)
    changes = len(brackets(samples))
    failed = sum(1 for s in samples if not s.ok)
    ok = changes == 0 and failed < len(samples)
    return CheckResult(
        name=check.name, kind=check.kind, expected=_expected_text(check),
        computed=float(changes), status=_verdict(check, ok),
        detail=f"失败样本 {failed}" if failed else None,
    )


def _check_cycle(check: CaseCheck, ctx: _Context) -> CheckResult:
    expected = _expected_text(check)
    if not ctx.cycles:
        return CheckResult(name=check.name, kind=check.kind, expected=expected, tol=check.tol,
                           status="SKIP", detail="未启用 --cycles")

    h_hint = ctx.found.get(check.zero)
    if h_hint is None:
        ref = ctx.spec.check(check.zero)
        h_hint = 0.5 * (ref.lo + ref.hi)
    report = locate_cycle(ctx.p, ctx.spec.perturbation(check.eps), check.center, h_hint,
                          get_settings().ode_tol)
    ok = abs(report.h_assoc - h_hint) <= check.tol
    return CheckResult(
        name=check.name, kind=check.kind, expected=f"{h_hint!r}",
        computed=report.h_assoc, tol=check.tol, status=_verdict(check, ok),
        detail=f"x={report.x_cross!r}, T={report.period:.4f}, {report.stability}",
    )


_HANDLERS = {
    "level": _check_value,
    "mu": _check_value,
    "melnikov": _check_value,
    "zero": _check_zero,
    "nozero": _check_nozero,
    "cycle": _check_cycle,
}

_ORDER = ("level", "mu", "melnikov", "nozero", "zero", "cycle")


def run_check(check: CaseCheck, ctx: _Context) -> CheckResult:
    """运行单项检查，领域错误记为 FAIL（info 级别记为 INFO）"""
    try:
        result = _HANDLERS[check.kind](check, ctx)
    except LabError as e:
        result = CheckResult(
            name=check.name, kind=check.kind, expected=_expected_text(check),
            tol=check.tol, status=_verdict(check, False), detail=f"{type(e).__name__}: {e.reason}",
        )
    line = f"[{ctx.spec.label}] {result.name}: {result.status}  computed={result.computed!r}"
    if result.status == "FAIL":
        logger.warning(line)
    else:
        logger.info(line)
    return result


def run_case(label: str, cycles: bool = False, jobs: Optional[int] = None,
             tol: Optional[float] = None) -> CaseReport:
    """
    复现一个算例

    参数:
        label: A–E
        cycles: 是否运行极限环定位（较慢）
        jobs: 扫描进程数
        tol: 求积相对容差

    返回:
        CaseReport，passed 为 True 当且仅当没有 FAIL

    异常:
        KeyError: 未知算例
    """
    spec = get_registry().get(label)
    ctx = _Context(spec, cycles, jobs, tol)
    logger.info(f"复现算例 {spec.label}: a1={spec.a1}, a4={spec.a4}, 分布 {tuple(spec.distribution)}")

    checks = sorted(spec.checks, key=lambda c: _ORDER.index(c.kind))
    results = [run_check(c, ctx) for c in checks]
    return CaseReport(label=spec.label, a1=spec.a1, a4=spec.a4, results=results)


# ==================== 输出 ====================

def render_report(report: CaseReport, console: Optional[Console] = None) -> None:
    """以表格形式输出报告"""
    console = console or Console()
    table = Table(title=f"算例 {report.label}  (a1={report.a1}, a4={report.a4})")
    table.add_column("检查")
    table.add_column("期望")
    table.add_column("计算值", justify="right")
    table.add_column("容差", justify="right")
    table.add_column("状态")
    table.add_column("说明", style="dim")

    for r in report.results:
        table.add_row(
            r.name,
            r.expected,
            "-" if r.computed is None else f"{r.computed:.12g}",
            "-" if r.tol is None else f"{r.tol:g}",
            f"[{_STYLES[r.status]}]{r.status}[/]",
            r.detail or "",
        )
    console.print(table)
    counts = report.counts()
    console.print(", ".join(f"{k} {v}" for k, v in counts.items()))
