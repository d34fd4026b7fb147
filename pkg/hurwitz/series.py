"""生成函数 H^{[d]}, Ĥ^{[d]} = e^{H^{[d]}}, 递推与偏微分方程的验证"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List

from algebra.combinat import Partition, hook_type
from algebra.permgroup import canonical_of_type, multiply_class_left
from algebra.psymring import (PMonomial, PPolynomial, ZSeries, phi_linear,
                              series_exp, series_log)
from exceptions import SeriesDomainError
from operators.wop import OperatorSpec, apply_operator, apply_to_series
from .counting import count_tuples

logger = logging.getLogger(__name__)


def exp_p1(k_max: int, w_max: int) -> ZSeries:
    """初始条件 Ĥ(0, p) = e^{p₁}"""
    return series_exp(ZSeries.from_polynomial(PPolynomial.p(1), k_max, w_max))


def build_hhat_series(d: int, w_max: int, k_max: int) -> ZSeries:
    """沿 W-流展开: Σ_k z^k/k! Δ_d^k(e^{p₁})"""
    op = OperatorSpec.delta(d)
    current = exp_p1(k_max, w_max).z_slice(0)
    result = ZSeries(k_max, w_max)
    for k in range(k_max + 1):
        if k:
            current = apply_operator(op, current)
        for m, c in current.items():
            result.add_term(k, m, c / factorial(k))
    return result


def build_series_bruteforce(d: int, w_max: int, k_max: int, connected: bool) -> ZSeries:
    """由暴力计数得到的级数, [z^k p_α] = count/(n!·k!)

    connected=False 给出 Ĥ (含 n=0 的常数项 1), connected=True 给出 H。
    """
    result = ZSeries(k_max, w_max)
    if not connected:
        result.add_term(0, PMonomial.unit(), 1)
    for n in range(1, w_max + 1):
        for k in range(k_max + 1):
            for alpha, count in count_tuples(n, d, k, connected).items():
                result.add_term(k, PMonomial.from_parts(alpha.parts),
                                Fraction(count, factorial(n) * factorial(k)))
    return result


def connected_from_log(s: ZSeries) -> ZSeries:
    """H = log Ĥ"""
    if s.constant_term() != 1:
        raise SeriesDomainError(f"连通部分的提取要求常数项为 1, 得到 {s.constant_term()}")
    return series_log(s)


def coefficient_count(s: ZSeries, k: int, alpha: Partition) -> Fraction:
    """n!·k!·[z^k p_α] s, 把级数系数换回计数"""
    n = alpha.weight
    return s.coefficient(k, PMonomial.from_parts(alpha.parts)) * factorial(n) * factorial(k)


@dataclass
class RecursionReport:
    n: int
    d: int
    k: int
    connected: bool
    lhs: PPolynomial
    rhs: PPolynomial

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _recursion_sides(n: int, d: int, k: int, connected: bool) -> RecursionReport:
    if k < 1:
        raise SeriesDomainError(f"递推要求 k ≥ 1, 得到 {k}")
    lhs = PPolynomial()
    for alpha, count in count_tuples(n, d, k, connected).items():
        lhs.add_term(PMonomial.from_parts(alpha.parts), count)
    rhs = PPolynomial()
    if n >= d:
        cls = hook_type(d, n)
        for alpha, count in count_tuples(n, d, k - 1, connected).items():
            image = phi_linear(multiply_class_left(cls, canonical_of_type(alpha)))
            rhs = rhs + image.scale(count)
    return RecursionReport(n, d, k, connected, lhs, rhs)


def verify_recursion(n: int, d: int, k: int) -> RecursionReport:
    """Σ_α ĥ_k(α)Φ(α) = Σ_α' ĥ_{k-1}(α')Φ(K_{1^{n-d}d}α'), 用不连通计数"""
    return _recursion_sides(n, d, k, connected=False)


def recursion_diagnostic(n: int, d: int, k: int) -> RecursionReport:
    """同一递推换成连通计数 h; 加减一个 d-循环不保持可迁性, 一般不成立"""
    return _recursion_sides(n, d, k, connected=True)


@dataclass
class PdeReport:
    d: int
    w_max: int
    k_max: int
    initial_condition: bool
    flow_matches_bruteforce: bool
    pde_holds: bool
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.initial_condition and self.flow_matches_bruteforce and self.pde_holds


def _diff(a: ZSeries, b: ZSeries, label: str, limit: int = 5) -> List[str]:
    delta = a - b
    return [f"{label}: z^{k} {m} 相差 {c}" for (k, m), c in delta.sorted_items()[:limit]]


def verify_pde(d: int, w_max: int, k_max: int) -> PdeReport:
    """检查 (a) W-流级数 = 暴力级数, (b) ∂_z Ĥ = Δ_d Ĥ, 以及初始条件"""
    flow = build_hhat_series(d, w_max, k_max)
    brute = build_series_bruteforce(d, w_max, k_max, connected=False)
    mismatches: List[str] = []

    initial = ZSeries.from_polynomial(brute.z_slice(0), 0, w_max)
    initial_ok = initial == exp_p1(0, w_max)
    if not initial_ok:
        mismatches += _diff(initial, exp_p1(0, w_max), "初始条件")

    flow_ok = flow == brute
    if not flow_ok:
        mismatches += _diff(flow, brute, "W-流与暴力计数")

    pde_ok = True
    if k_max >= 1:
        lhs = brute.z_derivative()
        rhs = apply_to_series(OperatorSpec.delta(d), brute).truncate(k_max - 1, w_max)
        pde_ok = lhs == rhs
        if not pde_ok:
            mismatches += _diff(lhs, rhs, "∂_z Ĥ 与 Δ_d Ĥ")

    report = PdeReport(d, w_max, k_max, initial_ok, flow_ok, pde_ok, mismatches)
    logger.info("PDE d=%d w_max=%d k_max=%d -> %s", d, w_max, k_max, report.passed)
    return report
