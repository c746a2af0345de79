# -*- coding: utf-8 -*-
"""
命令行入口

子命令：classify | levels | mu | hopf-solve | scan | zeros | simulate | cycles | reproduce

数值参数接受小数或分数（"-30/7"）。用法错误退出码为 2；
领域错误（LabError）在标准输出打印 JSON 错误对象后以退出码 1 结束。

典型用法：
    python main.py classify --a1 -3 --a2 0 --a3 0 --a4 -8/3
    python main.py zeros --a1 -30/7 --a4 -65/21 --b01 -1 --b11 230/21 --region right --h-lo -1.5 --h-hi -0.088
    python main.py reproduce --case E
"""

from contextlib import contextmanager
from enum import Enum
from typing import Optional

import typer
from pydantic import ValidationError

from Data.Error import DegenerateMap, LabError, QuadratureFailure
from PublicTools import (
    dumps,
    format_csv,
    get_settings,
    logger,
    parse_number,
    parse_pair,
    set_level,
    write_csv,
    write_json,
)
from module.Cases import get_registry, render_report, run_case
from module.Classify import (
    classify_canonical,
    classify_complex,
    complex_to_canonical,
    singularity_layout,
    verify_integrating_factor,
)
from module.Hopf import ACHIEVABLE, distribution, first_nonzero, mu_coefficients, solve_a4_zero_mu02
from module.Integrable import critical_levels
from module.Melnikov import scan as scan_melnikov
from module.Melnikov import zeros as find_zeros
from module.Model import (
    CanonicalQuadratic,
    ComplexFormParams,
    Perturbation,
    Region,
    ReversibleParams,
    validate_reversible,
)
from module.ODESim import integrate, locate_cycle


app = typer.Typer(add_completion=False, no_args_is_help=True, help="二次可积系统扰动极限环的数值实验")

# 未给出扫描区间时，从临界值向外取的默认宽度
DEFAULT_NEAR = 1e-4
DEFAULT_WIDTH = 1.0


class Center(str, Enum):
    ORIGIN = "origin"
    ONE_ZERO = "one_zero"


# ==================== 公共 ====================

@app.callback()
def main(log: Optional[str] = typer.Option(None, "--log", help="日志级别 error / info / debug，覆盖 QLC_LOG")):
    if log is not None:
        set_level(log)


def _num(text: Optional[str], flag: str, default: Optional[float] = None) -> float:
    if text is None:
        if default is None:
            raise typer.BadParameter("缺少数值", param_hint=flag)
        return default
    try:
        return parse_number(text)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=flag)


def _pair(text: Optional[str], flag: str) -> tuple:
    if text is None:
        return 0.0, 0.0
    try:
        return parse_pair(text)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=flag)


@contextmanager
def _domain_errors():
    try:
        yield
    except LabError as e:
        typer.echo(dumps(e.to_dict()))
        raise typer.Exit(code=1)
    except ValidationError as e:
        raise typer.BadParameter(str(e))


def _emit_json(data, out: Optional[str]) -> None:
    if out:
        write_json(out, data)
    typer.echo(dumps(data))


def _emit_csv(header, rows, out: Optional[str]) -> None:
    rows = list(rows)
    if out:
        write_csv(out, header, rows)
    else:
        typer.echo(format_csv(header, rows), nl=False)


def _reversible(a1: str, a4: str) -> ReversibleParams:
    return validate_reversible(ReversibleParams(a1=_num(a1, "--a1"), a4=_num(a4, "--a4")))


def _perturbation(eps: Optional[str], a10: Optional[str], b01: Optional[str], b11: Optional[str]) -> Perturbation:
    return Perturbation(
        eps=_num(eps, "--eps", 0.0),
        a10=_num(a10, "--a10", 1.0),
        b01=_num(b01, "--b01", 0.0),
        b11=_num(b11, "--b11", 0.0),
    )


def _scan_range(p: ReversibleParams, region: Region, h_lo: Optional[str], h_hi: Optional[str]):
    bound = critical_levels(p).bound(region)
    if region is Region.LEFT:
        default = (bound + DEFAULT_NEAR, bound + DEFAULT_WIDTH)
    else:
        default = (bound - DEFAULT_WIDTH, bound - DEFAULT_NEAR)
    return _num(h_lo, "--h-lo", default[0]), _num(h_hi, "--h-hi", default[1])


# ==================== classify / levels ====================

@app.command()
def classify(
    a1: Optional[str] = typer.Option(None, "--a1"),
    a2: Optional[str] = typer.Option(None, "--a2"),
    a3: Optional[str] = typer.Option(None, "--a3"),
    a4: Optional[str] = typer.Option(None, "--a4"),
    lam: Optional[str] = typer.Option(None, "--lambda", help="复形式的 λ"),
    A: Optional[str] = typer.Option(None, "--A", help="复系数 A，写作 \"实部,虚部\""),
    B: Optional[str] = typer.Option(None, "--B"),
    C: Optional[str] = typer.Option(None, "--C"),
):
    """判定中心类型，输出标签、各条件残差与奇点分布"""
    with _domain_errors():
        complex_form = any(v is not None for v in (lam, A, B, C))
        if complex_form:
            z = ComplexFormParams(lam=_num(lam, "--lambda", 0.0), A=_pair(A, "--A"), B=_pair(B, "--B"), C=_pair(C, "--C"))
            center = classify_complex(z)
            params = z
            canonical = None
            if center.label is not None:
                try:
                    canonical = complex_to_canonical(z, center)
                except DegenerateMap as e:
                    logger.info(f"无法化为规范形式: {e.reason}")
        else:
            canonical = CanonicalQuadratic(a1=_num(a1, "--a1"), a2=_num(a2, "--a2"), a3=_num(a3, "--a3"), a4=_num(a4, "--a4"))
            center = classify_canonical(canonical)
            params = canonical

        doc = {
            "form": "complex" if complex_form else "canonical",
            "label": center.label,
            "labels": center.labels,
            "residuals": center.residuals,
            "v1": center.v1,
            "note": center.note,
            "canonical": canonical,
            "factor_residual": verify_integrating_factor(center, params) if center.label is not None else None,
            "layout": None,
        }
        if canonical is not None and canonical.a2 == 0 and canonical.a3 == 0:
            try:
                p = validate_reversible(ReversibleParams(a1=canonical.a1, a4=canonical.a4))
                doc["layout"] = singularity_layout(p)
            except LabError:
                pass
        _emit_json(doc, None)


@app.command()
def levels(
    a1: str = typer.Option(..., "--a1"),
    a4: str = typer.Option(..., "--a4"),
):
    """临界值 h00、h10 与两侧的可容许区间"""
    with _domain_errors():
        p = _reversible(a1, a4)
        lv = critical_levels(p)
        _emit_json({
            "h00": lv.h00,
            "h10": lv.h10,
            "two_center": p.two_center,
            "left": {"lo": lv.h00, "hi": None},
            "right": {"lo": None, "hi": lv.h10},
        }, None)


# ==================== mu / hopf-solve ====================

@app.command()
def mu(
    a1: str = typer.Option(..., "--a1"),
    a4: str = typer.Option(..., "--a4"),
    a10: Optional[str] = typer.Option(None, "--a10"),
    b01: Optional[str] = typer.Option(None, "--b01"),
    b11: Optional[str] = typer.Option(None, "--b11"),
):
    """展开系数 μ00..μ03, μ10..μ13"""
    with _domain_errors():
        p = _reversible(a1, a4)
        coeffs = mu_coefficients(p, _perturbation(None, a10, b01, b11))
        doc = coeffs.as_dict()
        doc["first_nonzero_0"] = first_nonzero(coeffs.mu0)
        doc["first_nonzero_1"] = first_nonzero(coeffs.mu1) if coeffs.mu1 is not None else None
        _emit_json(doc, None)


@app.command("hopf-solve")
def hopf_solve(
    target: str = typer.Option(..., "--distribution", help="目标分布，例如 \"3,0\""),
    a1: str = typer.Option(..., "--a1"),
    a4: Optional[str] = typer.Option(None, "--a4", help="(3,0)、(0,3) 时由求解确定"),
    a10: Optional[str] = typer.Option(None, "--a10"),
):
    """求实现给定小极限环分布的参数"""
    n0, n1 = _pair(target, "--distribution")
    if n0 != int(n0) or n1 != int(n1):
        raise typer.BadParameter("分布必须为整数", param_hint="--distribution")
    wanted = (int(n0), int(n1))
    with _domain_errors():
        a1_value = _num(a1, "--a1")
        if a4 is None and wanted in ACHIEVABLE and wanted not in ((3, 0), (0, 3)):
            raise typer.BadParameter(f"分布 {wanted} 需要 --a4", param_hint="--a4")
        # (3,0)、(0,3) 与不可实现的目标只用到 a1，a4 取占位值
        a4_value = _num(a4, "--a4", solve_a4_zero_mu02(a1_value))
        d = distribution(ReversibleParams(a1=a1_value, a4=a4_value), wanted, _num(a10, "--a10", 1.0))
        _emit_json(d, None)


# ==================== scan / zeros ====================

@app.command()
def scan(
    a1: str = typer.Option(..., "--a1"),
    a4: str = typer.Option(..., "--a4"),
    a10: Optional[str] = typer.Option(None, "--a10"),
    b01: Optional[str] = typer.Option(None, "--b01"),
    b11: Optional[str] = typer.Option(None, "--b11"),
    region: Region = typer.Option(Region.LEFT, "--region"),
    h_lo: Optional[str] = typer.Option(None, "--h-lo"),
    h_hi: Optional[str] = typer.Option(None, "--h-hi"),
    n: int = typer.Option(200, "--n", min=2),
    jobs: Optional[int] = typer.Option(None, "--jobs", min=1),
    tol: Optional[str] = typer.Option(None, "--tol"),
    out: Optional[str] = typer.Option(None, "--out"),
):
    """在 [h_lo, h_hi] 上采样 M(h)，输出 CSV: h,M,ok"""
    with _domain_errors():
        p = _reversible(a1, a4)
        lo, hi = _scan_range(p, region, h_lo, h_hi)
        samples = scan_melnikov(region, lo, hi, n, p, _perturbation(None, a10, b01, b11), jobs,
                                _num(tol, "--tol", get_settings().tol))
        if not any(s.ok for s in samples):
            raise QuadratureFailure("所有样本均失败", {"region": region.value, "h_lo": lo, "h_hi": hi, "n": n})
        _emit_csv(["h", "M", "ok"], ((s.h, s.M, s.ok) for s in samples), out)


@app.command()
def zeros(
    a1: str = typer.Option(..., "--a1"),
    a4: str = typer.Option(..., "--a4"),
    a10: Optional[str] = typer.Option(None, "--a10"),
    b01: Optional[str] = typer.Option(None, "--b01"),
    b11: Optional[str] = typer.Option(None, "--b11"),
    region: Region = typer.Option(Region.LEFT, "--region"),
    h_lo: Optional[str] = typer.Option(None, "--h-lo"),
    h_hi: Optional[str] = typer.Option(None, "--h-hi"),
    n: int = typer.Option(200, "--n", min=2),
    jobs: Optional[int] = typer.Option(None, "--jobs", min=1),
    tol: Optional[str] = typer.Option(None, "--tol"),
    out: Optional[str] = typer.Option(None, "--out"),
):
    """M(h) 的零点，输出 JSON 列表 [{lo, hi, h_star}]"""
    with _domain_errors():
        p = _reversible(a1, a4)
        lo, hi = _scan_range(p, region, h_lo, h_hi)
        found = find_zeros(region, lo, hi, n, p, _perturbation(None, a10, b01, b11), jobs,
                           _num(tol, "--tol", get_settings().tol))
        _emit_json(found, out)


# ==================== simulate / cycles ====================

@app.command()
def simulate(
    a1: str = typer.Option(..., "--a1"),
    a4: str = typer.Option(..., "--a4"),
    a10: Optional[str] = typer.Option(None, "--a10"),
    b01: Optional[str] = typer.Option(None, "--b01"),
    b11: Optional[str] = typer.Option(None, "--b11"),
    eps: Optional[str] = typer.Option(None, "--eps"),
    x0: str = typer.Option(..., "--x0"),
    y0: str = typer.Option("0", "--y0"),
    t_max: str = typer.Option("100", "--t-max"),
    tol: Optional[str] = typer.Option(None, "--tol"),
    out: Optional[str] = typer.Option(None, "--out"),
):
    """积分扰动系统的轨道，输出 CSV: t,x,y"""
    with _domain_errors():
        p = _reversible(a1, a4)
        traj = integrate(p, _perturbation(eps, a10, b01, b11), _num(x0, "--x0"), _num(y0, "--y0"),
                         _num(t_max, "--t-max"), _num(tol, "--tol", get_settings().ode_tol))
        _emit_csv(["t", "x", "y"], traj.rows(), out)


@app.command()
def cycles(
    a1: str = typer.Option(..., "--a1"),
    a4: str = typer.Option(..., "--a4"),
    a10: Optional[str] = typer.Option(None, "--a10"),
    b01: Optional[str] = typer.Option(None, "--b01"),
    b11: Optional[str] = typer.Option(None, "--b11"),
    eps: str = typer.Option(..., "--eps"),
    center: Center = typer.Option(Center.ORIGIN, "--center"),
    h_hint: str = typer.Option(..., "--h-hint"),
    tol: Optional[str] = typer.Option(None, "--tol"),
    out: Optional[str] = typer.Option(None, "--out"),
):
    """在 L_{h_hint} 附近定位大极限环，输出 CycleReport JSON"""
    with _domain_errors():
        p = _reversible(a1, a4)
        report = locate_cycle(p, _perturbation(eps, a10, b01, b11), center.value, _num(h_hint, "--h-hint"),
                              _num(tol, "--tol", get_settings().ode_tol))
        _emit_json(report, out)


# ==================== reproduce ====================

@app.command()
def reproduce(
    case: str = typer.Option(..., "--case", help="算例 A–E"),
    with_cycles: bool = typer.Option(False, "--cycles", help="同时定位大极限环（较慢）"),
    json_out: Optional[str] = typer.Option(None, "--json", help="JSON 报告路径"),
    jobs: Optional[int] = typer.Option(None, "--jobs", min=1),
    tol: Optional[str] = typer.Option(None, "--tol"),
):
    """复现算例并逐项输出 PASS / FAIL / INFO / SKIP"""
    registry = get_registry()
    if case.strip().upper() not in registry.labels():
        raise typer.BadParameter(f"未知算例 {case!r}，可选: {', '.join(registry.labels())}", param_hint="--case")
    with _domain_errors():
        report = run_case(case, cycles=with_cycles, jobs=jobs, tol=_num(tol, "--tol", get_settings().tol))
        render_report(report)
        if json_out:
            write_json(json_out, {"passed": report.passed, **report.model_dump(mode="json")})
    if not report.passed:
        raise typer.Exit(code=1)
