# -*- coding: utf-8 -*-
"""
实验室异常定义

所有领域错误继承 LabError，携带 reason 与 details，
命令行以 to_dict() 的 JSON 形式输出并以退出码 1 结束。
注意：这些异常不继承 ValueError，在 pydantic 校验器中抛出时会原样传播。
"""

from typing import Any, Dict, Optional


class LabError(Exception):
    def __init__(self, reason: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(reason)
        self.reason = reason
        self.details = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "reason": self.reason,
            "details": self.details,
        }


# ==================== 参数与几何 ====================

class DegenerateParameters(LabError):
    pass


class SingularLine(LabError):
    pass


class NoOval(LabError):
    pass


class LogDomain(LabError):
    pass


class DivisionByZero(LabError):
    pass


class DegenerateMap(LabError):
    pass


class ImpossibleDistribution(LabError):
    pass


# ==================== 数值过程 ====================

class QuadratureFailure(LabError):
    pass


class LostBracket(LabError):
    pass


class StepFailure(LabError):
    pass


class EscapedAnnulus(LabError):
    pass


class SingularLineHit(LabError):
    pass


class NoSignChange(LabError):
    pass
