#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""自定义异常类"""


class WOperatorError(Exception):
    """W算子引擎基础异常类"""
    pass


class PartitionError(WOperatorError, ValueError):
    """整数分拆不合法"""
    pass


class PermutationError(WOperatorError, ValueError):
    """置换或元组不合法"""
    pass


class DegreeMismatchError(WOperatorError, ValueError):
    """对称群阶数 n 不一致"""
    pass


class SeriesDomainError(WOperatorError, ValueError):
    """级数常数项不满足 exp/log 的前提"""
    pass


class TruncationError(WOperatorError, ValueError):
    """截断参数或矩阵下标越界"""
    pass


class GradingError(WOperatorError):
    """算子破坏了权重分次"""
    pass


class PolynomialSyntaxError(WOperatorError, ValueError):
    """多项式文本无法解析"""
    pass


class QueryError(WOperatorError, ValueError):
    """Hurwitz 查询参数不合法"""
    pass
