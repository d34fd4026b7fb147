"""置换、群代数与 d-元组分类

约定: (σ∘g)(x) = σ(g(x)), 右边的因子先作用; 点从 1 开始编号。
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from exceptions import DegreeMismatchError, PartitionError, PermutationError
from .combinat import Partition, class_size, make_partition

logger = logging.getLogger(__name__)


class Permutation:
    """{1..n} 上的双射, images[i-1] = σ(i)"""
    __slots__ = ("images",)

    def __init__(self, images: Sequence[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(1, len(images) + 1)):
            raise PermutationError(f"不是 {{1..{len(images)}}} 上的双射: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1), check=False)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """由不相交循环构造, 未出现的点为不动点"""
        images = list(range(1, n + 1))
        seen: Set[int] = set()
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                if not 1 <= a <= n or a in seen:
                    raise PermutationError(f"循环 {tuple(cycle)} 在 S_{n} 中不合法")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, 1):
            inv[img - 1] = i
        return Permutation(inv, check=False)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))

    def cycles(self) -> List[Tuple[int, ...]]:
        """不相交循环分解 (含 1-循环), 每个循环从最小点开始"""
        seen: Set[int] = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation{self.images}"


def compose(sigma: Permutation, g: Permutation) -> Permutation:
    """σ∘g, 即 x ↦ σ(g(x))"""
    if sigma.degree != g.degree:
        raise DegreeMismatchError(f"阶数不一致: {sigma.degree} 与 {g.degree}")
    s = sigma.images
    return Permutation([s[x - 1] for x in g.images], check=False)


def cycle_type(sigma: Permutation) -> Partition:
    if sigma.degree == 0:
        raise PermutationError("空置换没有循环型")
    return make_partition([len(c) for c in sigma.cycles()])


def canonical_of_type(lam: Partition) -> Permutation:
    """循环为连续块 (1…λ₁)(λ₁+1…λ₁+λ₂)… 的置换"""
    cycles, start = [], 1
    for part in lam.parts:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(lam.weight, cycles)


def iter_class(lam: Partition, n: Optional[int] = None) -> Iterator[Permutation]:
    """不遍历 S_n, 直接逐个生成型为 λ 的置换 (每个恰好一次)"""
    n = lam.weight if n is None else n
    if lam.weight != n:
        raise PartitionError(f"分拆 {lam} 的权重与 n={n} 不符")
    images = [0] * n

    def fill(unused: Tuple[int, ...], remaining: Counter) -> Iterator[Permutation]:
        if not unused:
            yield Permutation(images, check=False)
            return
        # 剩余的最小点开启下一个循环
        first, rest = unused[0], unused[1:]
        for length in sorted(k for k, v in remaining.items() if v > 0):
            remaining[length] -= 1
            for others in itertools.permutations(rest, length - 1):
                cycle = (first,) + others
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    images[a - 1] = b
                chosen = set(others)
                yield from fill(tuple(x for x in rest if x not in chosen), remaining)
            remaining[length] += 1

    yield from fill(tuple(range(1, n + 1)), Counter(lam.parts))


def iter_symmetric_group(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images, check=False)


class GroupAlgebraElement:
    """群代数 CS_n 的元素: 置换 → 有理系数"""

    def __init__(self, n: int, terms: Optional[Dict[Permutation, Fraction]] = None):
        self.n = n
        self.terms: Dict[Permutation, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            self._add_term(perm, Fraction(coeff))

    def _add_term(self, perm: Permutation, coeff: Fraction):
        if perm.degree != self.n:
            raise DegreeMismatchError(f"置换阶数 {perm.degree} 与群代数 S_{self.n} 不符")
        value = self.terms.get(perm, Fraction(0)) + coeff
        if value:
            self.terms[perm] = value
        else:
            self.terms.pop(perm, None)

    @classmethod
    def from_permutations(cls, n: int, perms: Iterable[Permutation]) -> "GroupAlgebraElement":
        element = cls(n)
        one = Fraction(1)
        for perm in perms:
            element._add_term(perm, one)
        return element

    @classmethod
    def class_sum(cls, lam: Partition) -> "GroupAlgebraElement":
        """K_λ = Σ_{σ 型为 λ} σ"""
        return cls.from_permutations(lam.weight, iter_class(lam))

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.n != other.n:
            raise DegreeMismatchError(f"阶数不一致: {self.n} 与 {other.n}")
        result = GroupAlgebraElement(self.n, self.terms)
        for perm, coeff in other.terms.items():
            result._add_term(perm, coeff)
        return result

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.n != other.n:
            raise DegreeMismatchError(f"阶数不一致: {self.n} 与 {other.n}")
        result = GroupAlgebraElement(self.n)
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                result._add_term(compose(p, q), a * b)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def total_mass(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))


def multiply_class_left(lam: Partition, g: Permutation) -> GroupAlgebraElement:
    """K_λ·g = Σ_{σ 型为 λ} σ∘g"""
    if lam.weight != g.degree:
        raise DegreeMismatchError(f"分拆 {lam} 的权重与 g 的阶数 {g.degree} 不符")
    return GroupAlgebraElement.from_permutations(g.degree, (compose(s, g) for s in iter_class(lam)))


class UnionFind:
    """按秩合并的并查集"""

    def __init__(self, elements: Iterable[int]):
        self.parent = {x: x for x in elements}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x: int) -> int:
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x: int, y: int):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        del self.rank[y]

    def __len__(self) -> int:
        return len(self.rank)


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    """生成子群作用在 {1..n} 上是否可迁"""
    if any(g.degree != n for g in gens):
        raise DegreeMismatchError(f"生成元的阶数必须都是 {n}")
    uf = UnionFind(range(1, n + 1))
    for g in gens:
        for x, y in enumerate(g.images, 1):
            uf.union(x, y)
    return len(uf) == 1


@dataclass(frozen=True)
class CycleTuple:
    """C̄_{n,d} 的元素 [j_d, …, j_1], points 按书写顺序存放"""
    points: Tuple[int, ...]
    n: int

    def __post_init__(self):
        if not self.points:
            raise PermutationError("元组长度至少为 1")
        if len(set(self.points)) != len(self.points):
            raise PermutationError(f"元组中的点必须互不相同: {self.points}")
        if any(not 1 <= j <= self.n for j in self.points):
            raise PermutationError(f"元组中的点必须在 1..{self.n} 内: {self.points}")

    @property
    def d(self) -> int:
        return len(self.points)

    def j(self, k: int) -> int:
        """j_k, 1 ≤ k ≤ d"""
        return self.points[self.d - k]

    def marked(self) -> Set[int]:
        return set(self.points)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.points)) + "]"


def pi_map(sigma_bar: CycleTuple) -> Permutation:
    """把 [a_1,…,a_d] 读成循环 (a_1 … a_d)"""
    return Permutation.from_cycles(sigma_bar.n, [list(sigma_bar.points)])


def iter_cycle_tuples(n: int, d: int) -> Iterator[CycleTuple]:
    for points in itertools.permutations(range(1, n + 1), d):
        yield CycleTuple(points, n)


def tuple_class_sum_left(d: int, g: Permutation) -> GroupAlgebraElement:
    """K̄·g = Σ_{σ̄ ∈ C̄_{n,d}} π(σ̄)∘g"""
    n = g.degree
    return GroupAlgebraElement.from_permutations(
        n, (compose(pi_map(t), g) for t in iter_cycle_tuples(n, d)))


@dataclass(frozen=True)
class TupleClassification:
    """(α, σ̄) 的型 τ ∈ S_d 与距离向量 (i_1, …, i_d)"""
    type_tau: Permutation
    distances: Tuple[int, ...]

    def __post_init__(self):
        if len(self.distances) != self.type_tau.degree:
            raise PermutationError("距离向量长度必须等于 d")
        if any(i < 1 for i in self.distances):
            raise PermutationError(f"距离必须 ≥ 1: {self.distances}")


def dist(j: int, alpha: Permutation, marked: Set[int]) -> int:
    """最小的 l ≥ 1 使 α^l(j) 落回标记集合"""
    if j not in marked:
        raise PermutationError(f"点 {j} 不在标记集合 {sorted(marked)} 中")
    if any(not 1 <= x <= alpha.degree for x in marked):
        raise PermutationError(f"标记集合超出 1..{alpha.degree}")
    x, l = alpha(j), 1
    while x not in marked:
        x, l = alpha(x), l + 1
    return l


def classify_tuple(alpha: Permutation, sigma_bar: CycleTuple) -> TupleClassification:
    """把 α 限制到标记点上 (j_k ↦ k) 得到 τ, 同时记录各点的距离"""
    if sigma_bar.n != alpha.degree:
        raise DegreeMismatchError(f"元组阶数 {sigma_bar.n} 与 α 的阶数 {alpha.degree} 不符")
    d = sigma_bar.d
    position = {sigma_bar.j(k): k for k in range(1, d + 1)}
    tau, distances = [0] * d, [0] * d
    for k in range(1, d + 1):
        x, l = alpha(sigma_bar.j(k)), 1
        while x not in position:
            x, l = alpha(x), l + 1
        tau[k - 1] = position[x]
        distances[k - 1] = l
    return TupleClassification(Permutation(tau, check=False), tuple(distances))


def cbar_subset(alpha: Permutation, tau: Permutation,
                distances: Sequence[int]) -> List[CycleTuple]:
    """C̄^τ_{n,d}(α, i_1, …, i_d), 暴力枚举 (测试用的基准)"""
    target = TupleClassification(tau, tuple(distances))
    return [t for t in iter_cycle_tuples(alpha.degree, tau.degree)
            if classify_tuple(alpha, t) == target]


def cbar_class_product(alpha: Permutation, tau: Permutation,
                       distances: Sequence[int]) -> GroupAlgebraElement:
    """Σ_{σ̄ ∈ C̄^τ(α, ī)} π(σ̄)∘α"""
    return GroupAlgebraElement.from_permutations(
        alpha.degree, (compose(pi_map(t), alpha) for t in cbar_subset(alpha, tau, distances)))


def merged_lengths(tau: Permutation, distances: Sequence[int]) -> List[int]:
    """ĩ_v = Σ_{k ∈ τ_v} i_k, 每个 τ 的循环一个"""
    return [sum(distances[k - 1] for k in cycle) for cycle in tau.cycles()]


def cbar_count_formula(alpha: Permutation, tau: Permutation,
                       distances: Sequence[int]) -> int:
    """Π_v c_v·ĩ_v; 只在 ĩ_v 两两不同时等于 |C̄^τ|"""
    counts = Counter(len(c) for c in alpha.cycles())
    return prod(counts[length] * length for length in merged_lengths(tau, distances))
