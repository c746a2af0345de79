#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
二次可积系统极限环实验室主程序

用法：
    python main.py --help
    python main.py reproduce --case A
"""

import os
import sys

# 添加当前目录到路径
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.append(current_dir)

from module.CLI import app


if __name__ == "__main__":
    app()
