# -*- coding: utf-8 -*-
"""
运行配置模块

通过环境变量（前缀 QLC_）或 .env 文件读取实验室的运行参数。

主要功能：
    - 日志级别 QLC_LOG（error / info / debug）
    - 并行进程数 QLC_JOBS
    - 求积与 ODE 的默认相对容差

典型用法：
    >>> from PublicTools.settings import get_settings
    >>> settings = get_settings()
    >>> settings.log
    'info'
"""

import os
from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


LOG_LEVELS = ("error", "info", "debug")

_base_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class LabSettings(BaseSettings):
    """
    实验室运行配置

    属性:
        log: 日志级别
        jobs: 扫描时的工作进程数，默认取逻辑核数
        tol: Abelian 积分的相对容差
        ode_tol: ODE 积分的相对容差
        record_dir: 日志文件目录
    """

    model_config = SettingsConfigDict(env_prefix="QLC_", env_file=".env", extra="ignore")

    log: str = "info"
    jobs: int = os.cpu_count() or 1
    tol: float = 1e-11
    ode_tol: float = 1e-11
    record_dir: str = os.path.join(_base_dir, "Data", "record")

    @field_validator("log", mode="before")
    @classmethod
    def _normalize_log(cls, value):
        value = str(value).strip().lower()
        # 非法值退回 info，由日志模块给出警告
        return value if value in LOG_LEVELS else "info"

    @field_validator("jobs")
    @classmethod
    def _check_jobs(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"jobs 必须为正整数，当前值: {value}")
        return value

    @field_validator("tol", "ode_tol")
    @classmethod
    def _check_tol(cls, value: float) -> float:
        if not (1e-13 <= value <= 1e-6):
            raise ValueError(f"容差必须位于 [1e-13, 1e-6]，当前值: {value}")
        return value


@lru_cache(maxsize=1)
def get_settings() -> LabSettings:
    return LabSettings()
