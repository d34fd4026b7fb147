"""幂和多项式环 C[p₁,p₂,…]、映射 Φ 与双重截断级数"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from exceptions import SeriesDomainError, TruncationError
from .combinat import Partition, make_partition
from .permgroup import GroupAlgebraElement, Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PMonomial:
    """Π p_k^{e_k}, exponents 按下标升序且不含零指数"""
    exponents: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "PMonomial":
        return cls(tuple(sorted((k, e) for k, e in mapping.items() if e)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "PMonomial":
        """p_α = p_{α_1} p_{α_2} …"""
        return cls.of(Counter(parts))

    @classmethod
    def unit(cls) -> "PMonomial":
        return cls()

    def as_dict(self) -> Dict[int, int]:
        return dict(self.exponents)

    def exponent(self, k: int) -> int:
        for idx, e in self.exponents:
            if idx == k:
                return e
        return 0

    @property
    def weight(self) -> int:
        return sum(k * e for k, e in self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def parts(self) -> Tuple[int, ...]:
        return tuple(sorted((k for k, e in self.exponents for _ in range(e)), reverse=True))

    def partition(self) -> Partition:
        return make_partition(self.parts())

    def __mul__(self, other: "PMonomial") -> "PMonomial":
        merged = Counter(self.as_dict())
        merged.update(other.as_dict())
        return PMonomial.of(merged)

    def sort_key(self):
        return (-self.weight, tuple(-p for p in self.parts()))

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(f"p{k}" if e == 1 else f"p{k}^{e}" for k, e in self.exponents)


class PPolynomial:
    """C[p₁,p₂,…] 中的稀疏多项式, 系数为精确有理数"""

    def __init__(self, terms: Optional[Mapping[PMonomial, Fraction]] = None):
        self.terms: Dict[PMonomial, Fraction] = {}
        for m, c in (terms or {}).items():
            self.add_term(m, c)

    @classmethod
    def zero(cls) -> "PPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "PPolynomial":
        return cls({PMonomial.unit(): Fraction(1)})

    @classmethod
    def monomial(cls, m: PMonomial, coeff=1) -> "PPolynomial":
        return cls({m: Fraction(coeff)})

    @classmethod
    def p(cls, k: int, e: int = 1) -> "PPolynomial":
        return cls.monomial(PMonomial.of({k: e}))

    def add_term(self, m: PMonomial, coeff):
        value = self.terms.get(m, Fraction(0)) + Fraction(coeff)
        if value:
            self.terms[m] = value
        else:
            self.terms.pop(m, None)

    def copy(self) -> "PPolynomial":
        result = PPolynomial()
        result.terms = dict(self.terms)
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return self.terms.items()

    def sorted_terms(self) -> List[Tuple[PMonomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, m: PMonomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def weights(self) -> set:
        return {m.weight for m in self.terms}

    def is_homogeneous(self, weight: Optional[int] = None) -> bool:
        ws = self.weights()
        if weight is None:
            return len(ws) <= 1
        return ws <= {weight}

    def total_mass(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def __add__(self, other: "PPolynomial") -> "PPolynomial":
        result = self.copy()
        for m, c in other.terms.items():
            result.add_term(m, c)
        return result

    def __neg__(self) -> "PPolynomial":
        return PPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "PPolynomial") -> "PPolynomial":
        return self + (-other)

    def scale(self, c) -> "PPolynomial":
        c = Fraction(c)
        if not c:
            return PPolynomial()
        return PPolynomial({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "PPolynomial":
        if not isinstance(other, PPolynomial):
            return self.scale(other)
        result = PPolynomial()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                result.add_term(m1 * m2, c1 * c2)
        return result

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PPolynomial":
        result = PPolynomial.one()
        for _ in range(e):
            result = result * self
        return result

    def derivative(self, k: int) -> "PPolynomial":
        """∂/∂p_k"""
        result = PPolynomial()
        for m, c in self.terms.items():
            e = m.exponent(k)
            if e:
                exps = m.as_dict()
                exps[k] = e - 1
                result.add_term(PMonomial.of(exps), c * e)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, PPolynomial):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[Tuple[PMonomial, Fraction]]:
        return iter(self.sorted_terms())

    def __str__(self) -> str:
        return format_terms(self.sorted_terms())

    def __repr__(self) -> str:
        return f"PPolynomial({self})"


def format_terms(terms: Iterable[Tuple[object, Fraction]]) -> str:
    """'2*p3 + 1/2*p1^2' 形式; 单位单项式只写系数"""
    pieces = []
    for m, c in terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = str(m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def phi(g: Permutation) -> PMonomial:
    """Φ(σ) = p_α, 其中 α 是 σ 的循环型 (不动点贡献 p₁)"""
    return PMonomial.from_parts(len(c) for c in g.cycles())


def phi_linear(x: GroupAlgebraElement) -> PPolynomial:
    """Φ 的线性延拓"""
    result = PPolynomial()
    for perm, coeff in x.items():
        result.add_term(phi(perm), coeff)
    return result


SeriesKey = Tuple[int, PMonomial]


class ZSeries:
    """Σ c_{k,m} z^k m, 只保留 k ≤ k_max 且 weight(m) ≤ w_max 的项"""

    def __init__(self, k_max: int, w_max: int,
                 coeffs: Optional[Mapping[SeriesKey, Fraction]] = None):
        if k_max < 0 or w_max < 0:
            raise TruncationError(f"截断参数必须非负: k_max={k_max}, w_max={w_max}")
        self.k_max = k_max
        self.w_max = w_max
        self.coeffs: Dict[SeriesKey, Fraction] = {}
        for (k, m), c in (coeffs or {}).items():
            self.add_term(k, m, c)

    def add_term(self, k: int, m: PMonomial, coeff):
        # 超出截断的项直接丢弃
        if k > self.k_max or m.weight > self.w_max:
            return
        key = (k, m)
        value = self.coeffs.get(key, Fraction(0)) + Fraction(coeff)
        if value:
            self.coeffs[key] = value
        else:
            self.coeffs.pop(key, None)

    @classmethod
    def one(cls, k_max: int, w_max: int) -> "ZSeries":
        return cls(k_max, w_max, {(0, PMonomial.unit()): Fraction(1)})

    @classmethod
    def from_polynomial(cls, f: PPolynomial, k_max: int, w_max: int, k: int = 0) -> "ZSeries":
        """z^k·f"""
        series = cls(k_max, w_max)
        for m, c in f.items():
            series.add_term(k, m, c)
        return series

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0, PMonomial.unit()), Fraction(0))

    def coefficient(self, k: int, m: PMonomial) -> Fraction:
        return self.coeffs.get((k, m), Fraction(0))

    def z_slice(self, k: int) -> PPolynomial:
        """z^k 的系数多项式"""
        return PPolynomial({m: c for (kk, m), c in self.coeffs.items() if kk == k})

    def truncate(self, k_max: int, w_max: int) -> "ZSeries":
        return ZSeries(min(k_max, self.k_max), min(w_max, self.w_max), self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ZSeries") -> "ZSeries":
        result = ZSeries(min(self.k_max, other.k_max), min(self.w_max, other.w_max), self.coeffs)
        for (k, m), c in other.coeffs.items():
            result.add_term(k, m, c)
        return result

    def scale(self, c) -> "ZSeries":
        c = Fraction(c)
        return ZSeries(self.k_max, self.w_max, {key: v * c for key, v in self.coeffs.items()})

    def __neg__(self) -> "ZSeries":
        return self.scale(-1)

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        return self + (-other)

    def __mul__(self, other) -> "ZSeries":
        if not isinstance(other, ZSeries):
            return self.scale(other)
        result = ZSeries(min(self.k_max, other.k_max), min(self.w_max, other.w_max))
        for (k1, m1), c1 in self.coeffs.items():
            for (k2, m2), c2 in other.coeffs.items():
                if k1 + k2 <= result.k_max and m1.weight + m2.weight <= result.w_max:
                    result.add_term(k1 + k2, m1 * m2, c1 * c2)
        return result

    def z_derivative(self) -> "ZSeries":
        """∂/∂z, 截断降为 k_max-1"""
        if self.k_max == 0:
            return ZSeries(0, self.w_max)
        result = ZSeries(self.k_max - 1, self.w_max)
        for (k, m), c in self.coeffs.items():
            if k:
                result.add_term(k - 1, m, c * k)
        return result

    def sorted_items(self) -> List[Tuple[SeriesKey, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda t: (t[0][0], t[0][1].sort_key()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        return (self.k_max, self.w_max, self.coeffs) == (other.k_max, other.w_max, other.coeffs)

    def __str__(self) -> str:
        pieces = []
        for k in sorted({k for k, _ in self.coeffs}):
            pieces.append(f"z^{k}: {self.z_slice(k)}")
        return "; ".join(pieces) or "0"


def series_exp(s: ZSeries) -> ZSeries:
    """exp(s) = Σ s^m/m!, 要求常数项为 0"""
    if s.constant_term():
        raise SeriesDomainError(f"exp 要求常数项为 0, 得到 {s.constant_term()}")
    result = ZSeries.one(s.k_max, s.w_max)
    term = ZSeries.one(s.k_max, s.w_max)
    m = 0
    # 每乘一次 s, (z 阶 + 权重) 至少增加 1, 所以有限步后为 0
    while True:
        m += 1
        term = (term * s).scale(Fraction(1, m))
        if term.is_zero():
            break
        result = result + term
    return result


def series_log(s: ZSeries) -> ZSeries:
    """log(s) = Σ (-1)^{m+1}(s-1)^m/m, 要求常数项为 1"""
    if s.constant_term() != 1:
        raise SeriesDomainError(f"log 要求常数项为 1, 得到 {s.constant_term()}")
    u = s - ZSeries.one(s.k_max, s.w_max)
    result = ZSeries(s.k_max, s.w_max)
    power = ZSeries.one(s.k_max, s.w_max)
    m = 0
    while True:
        m += 1
        power = power * u
        if power.is_zero():
            break
        sign = 1 if m % 2 else -1
        result = result + power.scale(Fraction(sign, m))
    return result


def p_to_x_subst(f: PPolynomial, N: int):
    """环同态 p_k ↦ tr(X^k), X 截断为 N×N"""
    from operators.xmatrix import XPolynomial, trace_power

    if N < 1:
        raise TruncationError(f"矩阵截断 N 必须为正: {N}")
    traces: Dict[int, XPolynomial] = {}
    result = XPolynomial(N)
    for m, c in f.items():
        term = XPolynomial.one(N)
        for k, e in m.exponents:
            if k not in traces:
                traces[k] = trace_power(N, k)
            for _ in range(e):
                term = term * traces[k]
        result = result + term.scale(c)
    return result
