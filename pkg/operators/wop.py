"""W-算子族在 C[p₁,p₂,…] 上的作用

三条相互独立的计算路径:
    - 割并算子 Δ 的闭式 (只对 d=2)
    - 解析定义 Δ_d / Δ_β: (1/d) Σ_δ Σ_a p̂_{φ(δ)}(a) ∂/∂p̂_δ(a)
    - 群代数路径: W([d]) Φ(g) = Φ(K_{1^{n-d}d}·g)
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import perm
from typing import Iterator, List, Optional, Sequence, Tuple

from algebra.combinat import hook_type
from algebra.permgroup import (Permutation, canonical_of_type, cbar_class_product, compose,
                               multiply_class_left)
from algebra.psymring import PMonomial, PPolynomial, ZSeries, phi, phi_linear
from exceptions import GradingError, PermutationError

logger = logging.getLogger(__name__)

Terms = Tuple[Tuple[PMonomial, Fraction], ...]


class OperatorKind(Enum):
    CUT_AND_JOIN = "cutjoin"
    DELTA_D = "delta"
    DELTA_BETA = "beta"
    GROUP_ROUTE = "group"


def default_beta(d: int) -> Permutation:
    """φ 默认使用的 d-循环 (d … 2 1)"""
    return Permutation.from_cycles(d, [list(range(d, 0, -1))])


def is_full_cycle(beta: Permutation) -> bool:
    return len(beta.cycles()) == 1


@dataclass(frozen=True)
class OperatorSpec:
    kind: OperatorKind
    d: int = 2
    beta: Optional[Permutation] = None

    def __post_init__(self):
        if self.d < 2:
            raise PermutationError(f"W([d]) 只对 d ≥ 2 考虑, 得到 d={self.d}")
        if self.kind is OperatorKind.CUT_AND_JOIN and self.d != 2:
            raise PermutationError("割并算子的闭式只对 d=2 定义")
        if self.kind is OperatorKind.DELTA_BETA:
            if self.beta is None or self.beta.degree != self.d or not is_full_cycle(self.beta):
                raise PermutationError(f"β 必须是 S_{self.d} 中的一个 {self.d}-循环")

    @classmethod
    def cut_and_join(cls) -> "OperatorSpec":
        return cls(OperatorKind.CUT_AND_JOIN, 2)

    @classmethod
    def delta(cls, d: int) -> "OperatorSpec":
        return cls(OperatorKind.DELTA_D, d)

    @classmethod
    def delta_beta(cls, beta: Permutation) -> "OperatorSpec":
        return cls(OperatorKind.DELTA_BETA, beta.degree, beta)

    @classmethod
    def group_route(cls, d: int) -> "OperatorSpec":
        return cls(OperatorKind.GROUP_ROUTE, d)

    def __str__(self) -> str:
        if self.kind is OperatorKind.DELTA_BETA:
            return f"{self.kind.value}(d={self.d}, β={self.beta})"
        return f"{self.kind.value}(d={self.d})"


def _check_length(delta: Permutation, a: Sequence[int]):
    if len(a) != delta.degree:
        raise PermutationError(f"a 的长度 {len(a)} 与 δ ∈ S_{delta.degree} 不符")


def _cycle_sums(delta: Permutation, a: Sequence[int]) -> List[int]:
    return [sum(a[j - 1] for j in cycle) for cycle in delta.cycles()]


def phat(delta: Permutation, a: Sequence[int]) -> PMonomial:
    """p̂_δ(a) = Π_v p_{Σ_{j∈δ_v} a_j}, 1-循环也算"""
    _check_length(delta, a)
    return PMonomial.from_parts(_cycle_sums(delta, a))


def _dhat_terms(targets: Sequence[int], m: PMonomial) -> Optional[Tuple[Fraction, PMonomial]]:
    """Π_v (s_v ∂/∂p_{s_v}) 作用在 m 上; 重复目标给出下降阶乘"""
    hits = Counter(targets)
    exps = m.as_dict()
    coeff = Fraction(1)
    for s, r in hits.items():
        e = exps.get(s, 0)
        if r > e:
            return None
        coeff *= s ** r * perm(e, r)
        exps[s] = e - r
    return coeff, PMonomial.of(exps)


def dhat_apply(delta: Permutation, a: Sequence[int], m: PMonomial) -> PPolynomial:
    """∂/∂p̂_δ(a) 作用在单项式 m 上"""
    _check_length(delta, a)
    found = _dhat_terms(_cycle_sums(delta, a), m)
    if found is None:
        return PPolynomial.zero()
    coeff, rest = found
    return PPolynomial.monomial(rest, coeff)


def phi_beta_map(beta: Permutation, delta: Permutation) -> Permutation:
    """φ_β(δ) = β∘δ"""
    if not is_full_cycle(beta):
        raise PermutationError(f"β={beta} 不是 {beta.degree}-循环")
    return compose(beta, delta)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """total 拆成 parts 个有序正整数"""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _iter_active_tuples(delta: Permutation, m: PMonomial) -> Iterator[Tuple[int, ...]]:
    """只枚举使 ∂/∂p̂_δ(a) m ≠ 0 的 a: 每个循环的和必须是 m 中出现的下标"""
    cycles = delta.cycles()
    exps = m.as_dict()
    support = sorted(exps)
    for targets in itertools.product(support, repeat=len(cycles)):
        if any(r > exps[s] for s, r in Counter(targets).items()):
            continue
        per_cycle = [list(_compositions(s, len(c))) for s, c in zip(targets, cycles)]
        for choice in itertools.product(*per_cycle):
            a = [0] * delta.degree
            for cycle, parts in zip(cycles, choice):
                for j, part in zip(cycle, parts):
                    a[j - 1] = part
            yield tuple(a)


@lru_cache(maxsize=None)
def _delta_terms(m: PMonomial, beta: Permutation) -> Terms:
    d = beta.degree
    result = PPolynomial()
    if m.weight < d:
        return ()
    for images in itertools.permutations(range(1, d + 1)):
        delta = Permutation(images, check=False)
        image = compose(beta, delta)
        for a in _iter_active_tuples(delta, m):
            coeff, rest = _dhat_terms(_cycle_sums(delta, a), m)
            result.add_term(phat(image, a) * rest, coeff)
    return tuple(result.scale(Fraction(1, d)).items())


@lru_cache(maxsize=None)
def _cut_and_join_terms(m: PMonomial) -> Terms:
    """(1/2) Σ_{i,j} (ij p_{i+j} ∂_i∂_j + (i+j) p_i p_j ∂_{i+j})"""
    f = PPolynomial.monomial(m)
    result = PPolynomial()
    support = sorted(m.as_dict())
    for i, j in itertools.product(support, repeat=2):
        second = f.derivative(i).derivative(j)
        if not second.is_zero():
            result = result + PPolynomial.p(i + j) * second.scale(i * j)
    for k in support:
        first = f.derivative(k)
        for i in range(1, k):
            result = result + PPolynomial.p(i) * PPolynomial.p(k - i) * first.scale(k)
    return tuple(result.scale(Fraction(1, 2)).items())


@lru_cache(maxsize=None)
def _group_route_terms(m: PMonomial, d: int) -> Terms:
    n = m.weight
    if n < d:
        # S_n 中没有 d-循环
        return ()
    g = canonical_of_type(m.partition())
    return tuple(phi_linear(multiply_class_left(hook_type(d, n), g)).items())


@lru_cache(maxsize=None)
def _delta3_terms(m: PMonomial) -> Terms:
    """Δ_3 的六个显式求和, 依次对应 (1)(2)(3), (1)(23), (2)(13), (3)(12), (123), (132)"""
    f = PPolynomial.monomial(m)
    w = m.weight
    result = PPolynomial()
    for i1, i2, i3 in itertools.product(range(1, w + 1), repeat=3):
        s = i1 + i2 + i3
        if s > w:
            continue
        lines = (
            (i1 * i2 * i3, (s,), (i1, i2, i3)),
            (i1 * (i2 + i3), (i1 + i3, i2), (i1, i2 + i3)),
            (i2 * (i1 + i3), (i1 + i2, i3), (i2, i1 + i3)),
            (i3 * (i1 + i2), (i3 + i2, i1), (i3, i1 + i2)),
            (s, (i1, i2, i3), (s,)),
            (s, (s,), (s,)),
        )
        for coeff, image, derivatives in lines:
            g = f
            for k in derivatives:
                g = g.derivative(k)
            if not g.is_zero():
                result = result + PPolynomial.monomial(PMonomial.from_parts(image)) * g.scale(coeff)
    return tuple(result.scale(Fraction(1, 3)).items())


def cut_and_join_closed_form(f: PPolynomial) -> PPolynomial:
    return apply_operator(OperatorSpec.cut_and_join(), f)


def delta3_closed_form(f: PPolynomial) -> PPolynomial:
    """Δ_3 按六个显式求和逐项展开, 不经过 φ_d 与 p̂"""
    result = PPolynomial()
    for m, c in f.items():
        for image, v in _delta3_terms(m):
            result.add_term(image, v * c)
    return result


def _monomial_terms(op: OperatorSpec, m: PMonomial) -> Terms:
    if op.kind is OperatorKind.CUT_AND_JOIN:
        return _cut_and_join_terms(m)
    if op.kind is OperatorKind.DELTA_D:
        return _delta_terms(m, default_beta(op.d))
    if op.kind is OperatorKind.DELTA_BETA:
        return _delta_terms(m, op.beta)
    return _group_route_terms(m, op.d)


def apply_operator(op: OperatorSpec, f: PPolynomial) -> PPolynomial:
    """把算子线性地作用在 f 上, 并检查每个单项式的权重保持不变"""
    result = PPolynomial()
    for m, c in f.items():
        terms = _monomial_terms(op, m)
        for image, v in terms:
            if image.weight != m.weight:
                raise GradingError(f"{op} 把权重 {m.weight} 的 {m} 映到了权重 {image.weight} 的 {image}")
            result.add_term(image, v * c)
    return result


def apply_to_series(op: OperatorSpec, s: ZSeries) -> ZSeries:
    """逐个 z 阶作用算子 (算子保持权重, 截断不变)"""
    result = ZSeries(s.k_max, s.w_max)
    for k in sorted({k for k, _ in s.coeffs}):
        for m, c in apply_operator(op, s.z_slice(k)).items():
            result.add_term(k, m, c)
    return result


def commutator(d1: int, d2: int, f: PPolynomial) -> PPolynomial:
    """Δ_{d1}Δ_{d2} f − Δ_{d2}Δ_{d1} f"""
    op1, op2 = OperatorSpec.delta(d1), OperatorSpec.delta(d2)
    return apply_operator(op1, apply_operator(op2, f)) - apply_operator(op2, apply_operator(op1, f))


def group_route_image(m: PMonomial, d: int) -> PPolynomial:
    """Φ(K_{1^{n-d}d}·g_λ), 其中 g_λ 是型为 m 的形状的标准置换"""
    return PPolynomial(dict(_group_route_terms(m, d)))


def cbar_contribution(alpha: Permutation, tau: Permutation,
                      distances: Sequence[int]) -> PPolynomial:
    """Φ(Σ_{σ̄ ∈ C̄^τ(α, ī)} π(σ̄)∘α), 群代数一侧"""
    return phi_linear(cbar_class_product(alpha, tau, distances))


def bridge_term(alpha: Permutation, tau: Permutation, distances: Sequence[int],
                beta: Optional[Permutation] = None) -> PPolynomial:
    """p̂_{φ(τ)}(ī)·∂/∂p̂_τ(ī) Φ(α), 解析一侧; 对每个实现的类与 cbar_contribution 相等"""
    beta = default_beta(tau.degree) if beta is None else beta
    derived = dhat_apply(tau, distances, phi(alpha))
    return PPolynomial.monomial(phat(phi_beta_map(beta, tau), distances)) * derived
