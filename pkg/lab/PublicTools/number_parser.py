# -*- coding: utf-8 -*-
"""
数值解析

命令行参数既接受小数也接受简单分数（如 "-30/7"），
分数按 Fraction 精确约分后再转为 float，避免多一次舍入。
"""

import math
from fractions import Fraction


def parse_number(text: str) -> float:
    """
    解析小数或分数字符串

    参数:
        text: 例如 "-4", "0.25", "-30/7", "1e-3"

    返回:
        float 值

    异常:
        ValueError: 无法解析、分母为零或结果非有限值
    """
    if isinstance(text, (int, float)):
        value = float(text)
    else:
        raw = str(text).strip().replace("−", "-")
        if not raw:
            raise ValueError("数值不能为空")
        try:
            if "/" in raw:
                num, den = raw.split("/", 1)
                value = float(Fraction(num.strip()) / Fraction(den.strip()))
            else:
                value = float(raw)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"无法解析数值 {text!r}: {e}") from e
    if not math.isfinite(value):
        raise ValueError(f"数值必须有限: {text!r}")
    return value


def parse_pair(text: str) -> tuple:
    """
    解析 "x,y" 形式的数对，用于复数系数 A / B / C 与分布目标 "3,0"
    """
    parts = [p for p in str(text).split(",")]
    if len(parts) != 2:
        raise ValueError(f"需要两个以逗号分隔的数值: {text!r}")
    return parse_number(parts[0]), parse_number(parts[1])
