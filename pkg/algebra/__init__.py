"""
代数基础模块 (algebra)
======================

本模块包含整数分拆、对称群与幂和多项式环的精确实现。

类列表
------
Partition
    整数分拆 (循环型), 弱递减的正整数元组
Permutation
    {1..n} 上的置换, 约定 (σ∘g)(x) = σ(g(x))
GroupAlgebraElement
    群代数 CS_n 的元素, 系数为精确有理数
CycleTuple
    带顺序的 d-元组 [j_d, …, j_1]
PPolynomial
    C[p₁,p₂,…] 中的稀疏多项式
ZSeries
    z 阶与权重双重截断的级数

使用示例
--------
>>> from algebra import make_partition, canonical_of_type, phi
>>> g = canonical_of_type(make_partition([2, 1]))
>>> str(phi(g))
'p1*p2'
"""

from .combinat import Partition, class_size, count_d_cycles, hook_type, iter_partitions, make_partition
from .permgroup import (CycleTuple, GroupAlgebraElement, Permutation, TupleClassification,
                        canonical_of_type, cbar_subset, classify_tuple, compose, cycle_type,
                        dist, is_transitive, multiply_class_left)
from .psymring import (PMonomial, PPolynomial, ZSeries, p_to_x_subst, phi, phi_linear,
                       series_exp, series_log)

__all__ = [
    'Partition', 'make_partition', 'class_size', 'count_d_cycles', 'hook_type', 'iter_partitions',
    'Permutation', 'GroupAlgebraElement', 'CycleTuple', 'TupleClassification',
    'compose', 'cycle_type', 'canonical_of_type', 'multiply_class_left', 'is_transitive',
    'dist', 'classify_tuple', 'cbar_subset',
    'PMonomial', 'PPolynomial', 'ZSeries', 'phi', 'phi_linear', 'series_exp', 'series_log',
    'p_to_x_subst',
]
