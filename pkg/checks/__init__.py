"""
验证套件模块 (checks)
=====================

SUITE_NAMES
    theorem-w, beta, commute, xmatrix, pde, recursion
WorkItem
    可交给进程池的单个检查, 返回 CheckResult
SuiteBounds
    桌面规模的枚举上界

使用示例
--------
>>> from checks import SuiteBounds, plan_suite
>>> results = [item.run() for item in plan_suite("commute", SuiteBounds(op_w_max=4))]
>>> all(r.passed for r in results)
True
"""

from .suites import SUITE_NAMES, CheckResult, SuiteBounds, WorkItem, plan_suite, run_item

__all__ = ['SUITE_NAMES', 'CheckResult', 'SuiteBounds', 'WorkItem', 'plan_suite', 'run_item']
