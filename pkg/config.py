#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""全局配置模块"""

import logging
import os

from rich.console import Console
from rich.logging import RichHandler

# 并行参数
DEFAULT_THREADS = int(os.getenv("WOP_THREADS", str(os.cpu_count() or 1)))

# 验证规模 (桌面规模默认值)
VERIFY_BOUNDS = {
    "n_max": int(os.getenv("WOP_N_MAX", "6")),
    "d_max": int(os.getenv("WOP_D_MAX", "3")),
    "w_max": int(os.getenv("WOP_W_MAX", "5")),
    "k_max": int(os.getenv("WOP_K_MAX", "3")),
    "matrix_n": int(os.getenv("WOP_MATRIX_N", "3")),
    # theorem-w / 割并 / beta / commute 不做 Hurwitz 枚举, 可以走得更远
    "theorem_n_max": int(os.getenv("WOP_THEOREM_N_MAX", "8")),
    "theorem_d_max": int(os.getenv("WOP_THEOREM_D_MAX", "4")),
    "cutjoin_w_max": int(os.getenv("WOP_CUTJOIN_W_MAX", "10")),
    "op_w_max": int(os.getenv("WOP_OP_W_MAX", "8")),
    "op_d_max": int(os.getenv("WOP_OP_D_MAX", "4")),
}

# 输出
OUTPUT_FORMATS = ("text", "json", "csv")
DEFAULT_OUTPUT_FORMAT = os.getenv("WOP_OUTPUT_FORMAT", "text")

VERIFY_SUITES = ("theorem-w", "beta", "commute", "xmatrix", "pde", "recursion", "all")

LOG_LEVEL = os.getenv("WOP_LOG_LEVEL", "WARNING")


def setup_logging(level: str = LOG_LEVEL) -> None:
    """把日志接到 rich 处理器上 (输出到 stderr)"""
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)],
    )
