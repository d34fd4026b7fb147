"""
W-算子模块 (operators)
======================

W([d]) 的三种实现:

OperatorSpec
    C[p] 上的算子选择 (割并闭式 / Δ_d / Δ_β / 群代数路径);
    Δ_3 另有逐项展开的 delta3_closed_form
XPolynomial
    截断 N 下矩阵元 X_{ab} 的多项式, 供 (1/d):tr(D^d): 作用

使用示例
--------
>>> from algebra import PPolynomial
>>> from operators import OperatorSpec, apply_operator
>>> str(apply_operator(OperatorSpec.delta(3), PPolynomial.p(1, 3)))
'2*p3'
"""

from .wop import (OperatorKind, OperatorSpec, apply_operator, apply_to_series, bridge_term,
                  cbar_contribution, commutator, cut_and_join_closed_form, delta3_closed_form,
                  dhat_apply, phat, phi_beta_map)
from .xmatrix import (XMonomial, XPolynomial, apply_D, apply_D_sequential, apply_D_tuple,
                      apply_w_truncated, trace_power, x_monomial_of_permutation)

__all__ = [
    'OperatorKind', 'OperatorSpec', 'apply_operator', 'apply_to_series', 'commutator',
    'cut_and_join_closed_form', 'delta3_closed_form', 'phat', 'dhat_apply', 'phi_beta_map',
    'cbar_contribution', 'bridge_term',
    'XMonomial', 'XPolynomial', 'trace_power', 'apply_D', 'apply_D_sequential',
    'apply_D_tuple', 'apply_w_truncated', 'x_monomial_of_permutation',
]
