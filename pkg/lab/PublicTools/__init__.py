# -*- coding: utf-8 -*-
"""
公共工具模块

主要工具：
    - logger: 日志系统（loguru）
    - set_level: 运行时切换日志级别
    - get_settings: 运行配置（QLC_* 环境变量）
    - parse_number / parse_pair: 小数与分数解析
    - write_json / write_csv: 结果文件输出
"""

from .log import logger, set_level
from .settings import LabSettings, get_settings
from .number_parser import parse_number, parse_pair
from .serializer import dumps, format_csv, read_csv, read_json, write_csv, write_json

__all__ = [
    'logger',
    'set_level',
    'LabSettings',
    'get_settings',
    'parse_number',
    'parse_pair',
    'dumps',
    'format_csv',
    'read_csv',
    'read_json',
    'write_csv',
    'write_json',
]

# 版本信息
__version__ = '1.0.0'
