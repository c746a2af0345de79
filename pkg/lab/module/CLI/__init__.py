"""
命令行模块
"""

from .LabCLI import app

__all__ = [
    'app',
]
