"""
算例注册与复现模块
"""

from .CaseRegistry import CASE_PARAMETERS, CaseCheck, CaseRegistry, CaseSpec, get_registry
from .Reproduce import CaseReport, CheckResult, render_report, run_case

__all__ = [
    'CASE_PARAMETERS',
    'CaseCheck',
    'CaseRegistry',
    'CaseSpec',
    'get_registry',
    'CaseReport',
    'CheckResult',
    'render_report',
    'run_case',
]
