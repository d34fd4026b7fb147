"""变量矩阵 X 的截断实现: D_{ab}、正规序乘积与 W([d]) = (1/d):tr(D^d):

只用到下标 ≤ N 的变量 X_{ab}; 任何下标 > N 的项作用在这些多项式上都是零,
所以截断 N 下的计算是精确的, 不是近似。
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import perm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from algebra.permgroup import Permutation
from exceptions import DegreeMismatchError, TruncationError

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]


@dataclass(frozen=True)
class XMonomial:
    """Π X_{ab}^{e}, exponents 按 (a, b) 排序且不含零指数"""
    exponents: Tuple[Tuple[Entry, int], ...]
    N: int

    def __post_init__(self):
        for (a, b), e in self.exponents:
            if not (1 <= a <= self.N and 1 <= b <= self.N):
                raise TruncationError(f"X_{a}{b} 超出截断 N={self.N}")
            if e <= 0:
                raise TruncationError(f"X_{a}{b} 的指数必须为正: {e}")

    @classmethod
    def of(cls, mapping: Mapping[Entry, int], N: int) -> "XMonomial":
        return cls(tuple(sorted((v, e) for v, e in mapping.items() if e)), N)

    def as_dict(self) -> Dict[Entry, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def __mul__(self, other: "XMonomial") -> "XMonomial":
        merged = Counter(self.as_dict())
        merged.update(other.as_dict())
        return XMonomial.of(merged, self.N)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        sep = "" if self.N < 10 else ","
        return "*".join(f"X{a}{sep}{b}" if e == 1 else f"X{a}{sep}{b}^{e}"
                        for (a, b), e in self.exponents)


class XPolynomial:
    """截断 N 下矩阵元变量的多项式"""

    def __init__(self, N: int, terms: Optional[Mapping[XMonomial, Fraction]] = None):
        if N < 1:
            raise TruncationError(f"矩阵截断 N 必须为正: {N}")
        self.N = N
        self.terms: Dict[XMonomial, Fraction] = {}
        for m, c in (terms or {}).items():
            self.add_term(m, c)

    @classmethod
    def one(cls, N: int) -> "XPolynomial":
        return cls(N, {XMonomial((), N): Fraction(1)})

    @classmethod
    def variable(cls, a: int, b: int, N: int) -> "XPolynomial":
        return cls(N, {XMonomial.of({(a, b): 1}, N): Fraction(1)})

    @classmethod
    def monomial(cls, m: XMonomial, coeff=1) -> "XPolynomial":
        return cls(m.N, {m: Fraction(coeff)})

    def add_term(self, m: XMonomial, coeff):
        if m.N != self.N:
            raise TruncationError(f"单项式截断 {m.N} 与多项式截断 {self.N} 不一致")
        value = self.terms.get(m, Fraction(0)) + Fraction(coeff)
        if value:
            self.terms[m] = value
        else:
            self.terms.pop(m, None)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def rows(self) -> set:
        return {a for m in self.terms for (a, _), _e in m.exponents}

    def _check_same(self, other: "XPolynomial"):
        if self.N != other.N:
            raise TruncationError(f"截断不一致: {self.N} 与 {other.N}")

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        self._check_same(other)
        result = XPolynomial(self.N, self.terms)
        for m, c in other.terms.items():
            result.add_term(m, c)
        return result

    def __sub__(self, other: "XPolynomial") -> "XPolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "XPolynomial":
        c = Fraction(c)
        if not c:
            return XPolynomial(self.N)
        return XPolynomial(self.N, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "XPolynomial":
        if not isinstance(other, XPolynomial):
            return self.scale(other)
        self._check_same(other)
        result = XPolynomial(self.N)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                result.add_term(m1 * m2, c1 * c2)
        return result

    def derivative(self, a: int, b: int) -> "XPolynomial":
        """∂/∂X_{ab}"""
        result = XPolynomial(self.N)
        for m, c in self.terms.items():
            exps = m.as_dict()
            e = exps.get((a, b), 0)
            if e:
                exps[(a, b)] = e - 1
                result.add_term(XMonomial.of(exps, self.N), c * e)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, XPolynomial):
            return self.N == other.N and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def __str__(self) -> str:
        from algebra.psymring import format_terms

        return format_terms(sorted(self.terms.items(), key=lambda t: (-t[0].degree, t[0].exponents)))

    def __repr__(self) -> str:
        return f"XPolynomial(N={self.N}, {self})"


def _check_index(N: int, *indices: int):
    for i in indices:
        if not 1 <= i <= N:
            raise TruncationError(f"下标 {i} 超出截断 1..{N}")


def trace_power(N: int, k: int) -> XPolynomial:
    """p_k = tr(X^k) = Σ_{a_1..a_k} X_{a_1a_2}…X_{a_ka_1}"""
    result = XPolynomial(N)
    for a in itertools.product(range(1, N + 1), repeat=k):
        entries = Counter((a[i], a[(i + 1) % k]) for i in range(k))
        result.add_term(XMonomial.of(entries, N), 1)
    return result


def apply_D(a: int, b: int, f: XPolynomial) -> XPolynomial:
    """D_{ab} = Σ_c X_{ac} ∂/∂X_{bc}"""
    _check_index(f.N, a, b)
    result = XPolynomial(f.N)
    for c in range(1, f.N + 1):
        df = f.derivative(b, c)
        if not df.is_zero():
            result = result + df * XPolynomial.variable(a, c, f.N)
    return result


def apply_D_sequential(pairs: Sequence[Entry], f: XPolynomial) -> XPolynomial:
    """不做正规序的乘积 D_{a_1b_1}…D_{a_db_d} f (最右边先作用)"""
    for a, b in reversed(pairs):
        f = apply_D(a, b, f)
    return f


def _falling(e: int, r: int) -> int:
    return perm(e, r) if r <= e else 0


def _apply_D_tuple_monomial(a: Sequence[int], m: XMonomial, coeff: Fraction,
                            out: XPolynomial):
    d = len(a)
    exps = m.as_dict()
    by_row: Dict[int, List[int]] = {}
    for (r, c) in exps:
        by_row.setdefault(r, []).append(c)
    # 第 i 个导数作用在 X_{a_{i+1} e_i} 上, e_i 只需取 m 中实际出现的列
    candidates = [by_row.get(a[(i + 1) % d], []) for i in range(d)]
    if any(not cols for cols in candidates):
        return
    for cols in itertools.product(*candidates):
        hits = Counter((a[(i + 1) % d], cols[i]) for i in range(d))
        factor = 1
        for v, r in hits.items():
            factor *= _falling(exps[v], r)
            if not factor:
                break
        if not factor:
            continue
        new_exps = Counter(exps)
        new_exps.subtract(hits)
        new_exps.update((a[i], cols[i]) for i in range(d))
        out.add_term(XMonomial.of(new_exps, m.N), coeff * factor)


def apply_D_tuple(a: Sequence[int], f: XPolynomial) -> XPolynomial:
    """D_{(a_1..a_d)} = :Π D_{a_i a_{i+1}}:, 先求全部导数再乘 X 因子"""
    _check_index(f.N, *a)
    result = XPolynomial(f.N)
    for m, c in f.items():
        _apply_D_tuple_monomial(a, m, c, result)
    return result


def apply_w_truncated(d: int, f: XPolynomial) -> XPolynomial:
    """W([d]) f = (1/d) Σ_{a ∈ {1..N}^d} D_{(a)} f"""
    if d < 1:
        raise TruncationError(f"d 必须为正: {d}")
    result = XPolynomial(f.N)
    # 每个 a_i 都以行下标的身份被求导, f 中没有的行贡献为零
    rows = sorted(f.rows())
    for a in itertools.product(rows, repeat=d):
        for m, c in f.items():
            _apply_D_tuple_monomial(a, m, c, result)
    return result.scale(Fraction(1, d))


def x_monomial_of_permutation(g: Permutation, labels: Sequence[int],
                              N: Optional[int] = None) -> XMonomial:
    """g 的箭图 i → g(i), 顶点按 labels 重新标号后的单项式 Π X_{l_i l_{g(i)}}"""
    if len(labels) != g.degree:
        raise DegreeMismatchError(f"标号个数 {len(labels)} 与 g 的阶数 {g.degree} 不符")
    N = max(labels) if N is None else N
    _check_index(N, *labels)
    entries = Counter((labels[i - 1], labels[g(i) - 1]) for i in range(1, g.degree + 1))
    return XMonomial.of(entries, N)
