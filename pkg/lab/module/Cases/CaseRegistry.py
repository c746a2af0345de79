# -*- coding: utf-8 -*-
"""
算例注册表

从 module/constants/cases.json 读取 A–E 五个算例：参数、分布目标以及
复现时逐项核对的期望值。

主要功能：
    - CaseCheck: 单项检查（临界值 / μ / M 抽样值 / 零点 / 无零点 / 极限环）
    - CaseSpec: 一个算例，参数以分数字符串保存并精确解析
    - CaseRegistry: 加载与校验，validate_all() 汇总所有错误

典型用法：
    >>> registry = get_registry()
    >>> is_valid, errors = registry.validate_all()
    >>> spec = registry.get("A")
    >>> spec.params.a1
    -4.285714285714286
"""

import json
import os
from functools import lru_cache
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from Data.Error import LabError
from PublicTools import logger, parse_number
from module.Hopf import ACHIEVABLE
from module.Model import Perturbation, Region, ReversibleParams, validate_reversible


_CASES_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "constants", "cases.json")

# 各算例的 (a1, a4)，cases.json 必须逐字一致
CASE_PARAMETERS: Dict[str, Tuple[str, str]] = {
    "A": ("-30/7", "-65/21"),
    "B": ("-70/51", "-55/51"),
    "C": ("-4", "-18/5"),
    "D": ("-4/3", "-6/5"),
    "E": ("-5", "-4"),
}

CheckKind = Literal["level", "mu", "melnikov", "zero", "nozero", "cycle"]
CheckMode = Literal["rel", "abs", "midpoint", "inside"]

# 每类检查必须给出的字段
_REQUIRED: Dict[str, Tuple[str, ...]] = {
    "level": ("target", "expected", "tol", "mode"),
    "mu": ("target", "expected", "tol", "mode"),
    "melnikov": ("region", "h", "expected", "tol", "mode"),
    "zero": ("region", "near", "far", "lo", "hi", "mode"),
    "nozero": ("region", "near", "far"),
    "cycle": ("center", "zero", "eps", "tol"),
}


class CaseCheck(BaseModel):
    """
    单项检查

    属性:
        name: 显示名（同一算例内唯一）
        kind: 检查类别
        target: level 取 h00/h10，mu 取 mu00..mu13
        expected / display: 期望数值与其闭式写法
        tol / mode: 容差与比较方式（rel/abs；零点为 midpoint/inside）
        severity: info 级别的检查只报告，不计入失败
        region, h: Melnikov 抽样点
        near, far, n: 扫描范围（near 为到临界值的距离，far 为另一端的 h）
        lo, hi: 零点的期望区间
        center, zero, eps: 极限环检查，zero 为引用的零点检查名
    """

    model_config = ConfigDict(frozen=True)

    name: str
    kind: CheckKind
    target: Optional[str] = None
    expected: Optional[float] = None
    display: Optional[str] = None
    tol: Optional[float] = None
    mode: Optional[CheckMode] = None
    severity: Literal["fail", "info"] = "fail"
    region: Optional[Region] = None
    h: Optional[float] = None
    near: Optional[float] = None
    far: Optional[float] = None
    n: int = 200
    lo: Optional[float] = None
    hi: Optional[float] = None
    center: Optional[Literal["origin", "one_zero"]] = None
    zero: Optional[str] = None
    eps: Optional[float] = None

    @model_validator(mode="after")
    def _check_fields(self) -> "CaseCheck":
        missing = [f for f in _REQUIRED[self.kind] if getattr(self, f) is None]
        if missing:
            raise ValueError(f"{self.kind} 检查 {self.name!r} 缺少字段: {', '.join(missing)}")
        if self.kind in ("zero", "nozero"):
            if self.near <= 0:
                raise ValueError(f"{self.name!r}: near 必须为正")
            if self.n < 2:
                raise ValueError(f"{self.name!r}: n 至少为 2")
        if self.kind == "zero" and not self.lo < self.hi:
            raise ValueError(f"{self.name!r}: 需要 lo < hi")
        if self.kind == "zero" and self.mode == "midpoint" and self.tol is None:
            raise ValueError(f"{self.name!r}: midpoint 模式需要 tol")
        return self

    def scan_range(self, bound: float) -> Tuple[float, float]:
        """由 near / far 得到扫描区间：左侧 [h00+near, far]，右侧 [far, h10-near]"""
        if self.region is Region.LEFT:
            return bound + self.near, self.far
        return self.far, bound - self.near


class CaseSpec(BaseModel):
    """
    一个算例

    参数在 JSON 中写成分数字符串（如 "-30/7"），这里保留原文，
    数值通过 parse_number 精确换算。扰动以 a10 = 1 归一化。
    """

    model_config = ConfigDict(frozen=True)

    label: str
    a1: str
    a4: str
    b01_ratio: str
    b11_ratio: str
    eps_hint: Optional[str] = None
    distribution: Tuple[int, int]
    checks: List[CaseCheck]

    @field_validator("a1", "a4", "b01_ratio", "b11_ratio", "eps_hint", mode="before")
    @classmethod
    def _check_number(cls, value):
        if value is None:
            return value
        value = str(value)
        parse_number(value)
        return value

    @property
    def params(self) -> ReversibleParams:
        return ReversibleParams(a1=parse_number(self.a1), a4=parse_number(self.a4))

    def perturbation(self, eps: float = 0.0) -> Perturbation:
        return Perturbation(
            eps=eps,
            a10=1.0,
            b01=parse_number(self.b01_ratio),
            b11=parse_number(self.b11_ratio),
        )

    @property
    def eps(self) -> Optional[float]:
        return None if self.eps_hint is None else parse_number(self.eps_hint)

    def check(self, name: str) -> CaseCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


class CaseRegistry:
    """
    算例注册表

    属性:
        path: cases.json 路径
        cases: 解析成功的算例（label -> CaseSpec）
    """

    def __init__(self, path: Optional[str] = None):
        """
        参数:
            path: 算例文件路径，None 时使用 module/constants/cases.json
        """
        self.path = path or _CASES_PATH
        self.cases: Dict[str, CaseSpec] = {}
        self._load_errors: List[str] = []
        self._load()

    def _load(self) -> None:
        if not os.path.isfile(self.path):
            self._load_errors.append(f"算例文件不存在: {self.path}")
            return
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                raw = json.load(f)
        except json.JSONDecodeError as e:
            self._load_errors.append(f"算例文件 JSON 格式错误: {e}")
            return
        if not isinstance(raw, dict):
            self._load_errors.append("算例文件顶层必须是对象")
            return

        for label, body in raw.items():
            try:
                self.cases[label] = CaseSpec(label=label, **body)
            except (ValidationError, TypeError) as e:
                self._load_errors.append(f"算例 {label}: {e}")
        logger.debug(f"已加载算例: {', '.join(self.cases)}")

    def labels(self) -> List[str]:
        return sorted(self.cases)

    def get(self, label: str) -> CaseSpec:
        """
        异常:
            KeyError: 未知算例
        """
        key = str(label).strip().upper()
        if key not in self.cases:
            raise KeyError(f"未知算例 {label!r}，可选: {', '.join(self.labels())}")
        return self.cases[key]

    # ==================== 校验 ====================

    def validate_all(self) -> Tuple[bool, List[str]]:
        """
        校验全部算例

        返回:
            (is_valid, errors)
        """
        errors = list(self._load_errors)

        missing = sorted(set(CASE_PARAMETERS) - set(self.cases))
        if missing and not self._load_errors:
            errors.append(f"缺少算例: {', '.join(missing)}")

        for spec in self.cases.values():
            is_valid, error_list = self.validate_case(spec)
            if not is_valid:
                errors.extend(error_list)

        return len(errors) == 0, errors

    def validate_case(self, spec: CaseSpec) -> Tuple[bool, List[str]]:
        """
        检查项：
            1. (a1, a4) 与 CASE_PARAMETERS 逐字一致
            2. 参数非退化且为两中心情形
            3. 分布目标可实现
            4. 检查名唯一，极限环检查引用的零点存在
        """
        errors = []
        prefix = f"算例 {spec.label}"

        expected = CASE_PARAMETERS.get(spec.label)
        if expected is None:
            errors.append(f"{prefix}: 未登记的算例")
        elif (spec.a1, spec.a4) != expected:
            errors.append(f"{prefix}: 参数 ({spec.a1}, {spec.a4}) 与登记值 {expected} 不一致")

        try:
            p = validate_reversible(spec.params)
            if not p.two_center:
                errors.append(f"{prefix}: 不是两中心情形")
        except LabError as e:
            errors.append(f"{prefix}: 参数退化 ({e.reason})")

        if tuple(spec.distribution) not in ACHIEVABLE:
            errors.append(f"{prefix}: 分布 {tuple(spec.distribution)} 不可实现")

        names = [c.name for c in spec.checks]
        duplicated = sorted({n for n in names if names.count(n) > 1})
        if duplicated:
            errors.append(f"{prefix}: 检查名重复 {duplicated}")

        zero_names = {c.name for c in spec.checks if c.kind == "zero"}
        for c in spec.checks:
            if c.kind == "cycle" and c.zero not in zero_names:
                errors.append(f"{prefix}: 极限环检查 {c.name!r} 引用了不存在的零点 {c.zero!r}")

        return len(errors) == 0, errors


@lru_cache(maxsize=1)
def get_registry() -> CaseRegistry:
    return CaseRegistry()
