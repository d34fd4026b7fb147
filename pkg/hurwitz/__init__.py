"""
广义 Hurwitz 数模块 (hurwitz)
=============================

counting
    单值化元组的暴力枚举, 连通 h 与不连通 ĥ
series
    生成函数 Ĥ = e^H、沿 W-流的构造、递推与 PDE 的验证

使用示例
--------
>>> from algebra import make_partition
>>> from hurwitz import HurwitzQuery, hurwitz_number
>>> hurwitz_number(HurwitzQuery(n=3, d=2, k=2, alpha=make_partition([3])))
6
"""

from .counting import HurwitzQuery, count_tuples, cov_bruteforce, hurwitz_number, hurwitz_table
from .series import (PdeReport, RecursionReport, build_hhat_series, build_series_bruteforce,
                     coefficient_count, connected_from_log, recursion_diagnostic,
                     verify_pde, verify_recursion)

__all__ = [
    'HurwitzQuery', 'count_tuples', 'cov_bruteforce', 'hurwitz_number', 'hurwitz_table',
    'PdeReport', 'RecursionReport', 'build_hhat_series', 'build_series_bruteforce',
    'coefficient_count', 'connected_from_log', 'recursion_diagnostic', 'verify_pde',
    'verify_recursion',
]
