"""单值化元组的暴力枚举: Cov 计数与广义 Hurwitz 数 h^{[d]}_k / ĥ^{[d]}_k"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.combinat import Partition, hook_type, iter_partitions
from algebra.permgroup import (Permutation, compose, cycle_type, is_transitive,
                               iter_class)
from exceptions import PartitionError, QueryError

logger = logging.getLogger(__name__)

# (分片编号, 分片总数), 按第一个因子的下标取模划分
Shard = Tuple[int, int]


@dataclass(frozen=True)
class HurwitzQuery:
    """h^{[d]}_k(α) (connected=True) 或 ĥ^{[d]}_k(α) (connected=False)"""
    n: int
    d: int
    k: int
    alpha: Partition
    connected: bool = True

    def __post_init__(self):
        if self.alpha.weight != self.n:
            raise QueryError(f"α={self.alpha} 的权重与 n={self.n} 不符")
        if not 2 <= self.d <= self.n:
            raise QueryError(f"需要 2 ≤ d ≤ n, 得到 d={self.d}, n={self.n}")
        if self.k < 0:
            raise QueryError(f"k 必须非负: {self.k}")


def _in_shard(index: int, shard: Optional[Shard]) -> bool:
    return shard is None or index % shard[1] == shard[0]


def _iter_products(classes: Sequence[List[Permutation]], n: int,
                   shard: Optional[Shard]) -> Iterator[Tuple[Tuple[Permutation, ...], Permutation]]:
    """逐个给出 (σ_1, …, σ_m) 与前缀积 σ_1∘…∘σ_m"""
    identity = Permutation.identity(n)

    def walk(level: int, chosen: Tuple[Permutation, ...], prefix: Permutation):
        if level == len(classes):
            yield chosen, prefix
            return
        for index, sigma in enumerate(classes[level]):
            if level == 0 and not _in_shard(index, shard):
                continue
            yield from walk(level + 1, chosen + (sigma,), compose(prefix, sigma))

    yield from walk(0, (), identity)


def _closes(factors: Sequence[Permutation], n: int) -> bool:
    """单值化条件: σ_1∘…∘σ_k = 1"""
    product = Permutation.identity(n)
    for sigma in factors:
        product = compose(product, sigma)
    return product.is_identity()


def cov_bruteforce(n: int, types: Sequence[Partition], shard: Optional[Shard] = None) -> int:
    """Cov_n(λ_1, …, λ_k): 型依次为 λ_i、乘积为 1 且生成可迁子群的元组个数

    只枚举前 k-1 个因子, 最后一个由单值化条件解出。
    """
    for lam in types:
        if lam.weight != n:
            raise PartitionError(f"分拆 {lam} 的权重与 n={n} 不符")
    if not types:
        return 1 if n == 1 else 0
    classes = [list(iter_class(lam)) for lam in types[:-1]]
    last_type = types[-1]
    total = 0
    for chosen, prefix in _iter_products(classes, n, shard if classes else None):
        last = prefix.inverse()
        if cycle_type(last) != last_type:
            continue
        factors = chosen + (last,)
        if not _closes(factors, n):
            raise AssertionError("解出的最后一个因子不满足单值化条件")
        if is_transitive(list(factors), n):
            total += 1
    return total


def count_tuples(n: int, d: int, k: int, connected: bool,
                 shard: Optional[Shard] = None) -> Dict[Partition, int]:
    """一次枚举给出所有 α ⊢ n 的计数: (σ_1, …, σ_k, σ), σ_i 为 d-循环, σ_1…σ_kσ = 1

    d > n 时没有 d-循环, 只有 k=0 的平凡元组。
    """
    if n < 1 or k < 0:
        raise QueryError(f"需要 n ≥ 1 且 k ≥ 0, 得到 n={n}, k={k}")
    tally: Counter = Counter()
    if k and d > n:
        return {}
    # k=0 时唯一的平凡元组只记在 0 号分片
    if not k and shard is not None and shard[0] != 0:
        return {}
    cycles = list(iter_class(hook_type(d, n))) if k else []
    for chosen, prefix in _iter_products([cycles] * k, n, shard if k else None):
        sigma = prefix.inverse()
        factors = chosen + (sigma,)
        if not _closes(factors, n):
            raise AssertionError("单值化条件不成立")
        if connected and not is_transitive(list(factors), n):
            continue
        tally[cycle_type(sigma)] += 1
    return dict(tally)


def hurwitz_table(n: int, d: int, k: int) -> Dict[Partition, Tuple[int, int]]:
    """α ↦ (h^{[d]}_k(α), ĥ^{[d]}_k(α)), 覆盖 n 的全部分拆"""
    connected = count_tuples(n, d, k, True)
    disconnected = count_tuples(n, d, k, False)
    return {alpha: (connected.get(alpha, 0), disconnected.get(alpha, 0))
            for alpha in iter_partitions(n)}


def hurwitz_number(q: HurwitzQuery) -> int:
    counts = count_tuples(q.n, q.d, q.k, q.connected)
    value = counts.get(q.alpha, 0)
    logger.debug("h[%d]_%d(%s) n=%d connected=%s -> %d", q.d, q.k, q.alpha, q.n, q.connected, value)
    return value
