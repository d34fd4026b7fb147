"""整数分拆与共轭类计数"""
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Dict, Iterator, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

from exceptions import PartitionError


@dataclass(frozen=True, order=True)
class Partition:
    """弱递减的正整数序列 (置换的循环型 / 单项式的形状)"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise PartitionError("分拆不能为空")
        if any(p < 1 for p in self.parts):
            raise PartitionError(f"分拆的每个部分必须 ≥ 1: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise PartitionError(f"分拆必须弱递减: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        """指数记号 1^{k_1} 2^{k_2} ... 中的 k_i"""
        return dict(sorted(Counter(self.parts).items()))

    def exp_notation(self) -> str:
        """例如 (2,1,1) -> '2 1^2'"""
        groups = sorted(Counter(self.parts).items(), reverse=True)
        return " ".join(str(p) if k == 1 else f"{p}^{k}" for p, k in groups)

    def __str__(self) -> str:
        return f"({self.exp_notation()})"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def make_partition(parts: Sequence[int]) -> Partition:
    """排序后构造规范分拆"""
    parts = list(parts)
    if not parts:
        raise PartitionError("分拆不能为空")
    if any(p <= 0 for p in parts):
        raise PartitionError(f"分拆的每个部分必须为正整数: {parts}")
    return Partition(tuple(sorted(parts, reverse=True)))


def hook_type(d: int, n: int) -> Partition:
    """d-循环的型 (d, 1^{n-d})"""
    if not 1 <= d <= n:
        raise PartitionError(f"需要 1 ≤ d ≤ n, 得到 d={d}, n={n}")
    return make_partition([d] + [1] * (n - d))


def iter_partitions(n: int) -> Iterator[Partition]:
    """按字典序从大到小枚举 n 的全部分拆"""
    found: List[Partition] = []
    for mult in _sympy_partitions(n):
        found.append(make_partition([p for p, k in mult.items() for _ in range(k)]))
    yield from sorted(found, reverse=True)


def z_factor(lam: Partition) -> int:
    """z_λ = Π i^{k_i} k_i!"""
    return prod(i ** k * factorial(k) for i, k in lam.multiplicities().items())


def class_size(lam: Partition, n: int) -> int:
    """|K_λ| = n!/z_λ"""
    if lam.weight != n:
        raise PartitionError(f"分拆 {lam} 的权重 {lam.weight} 与 n={n} 不符")
    return factorial(n) // z_factor(lam)


def count_d_cycles(n: int, d: int) -> int:
    """S_n 中 d-循环的个数, d > n 时为 0"""
    if d > n:
        return 0
    return comb(n, d) * factorial(d) // d
