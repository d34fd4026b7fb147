"""整数分拆与类计数"""
from collections import Counter
from math import factorial

import pytest

from algebra.combinat import (class_size, count_d_cycles, hook_type, iter_partitions,
                              make_partition)
from algebra.permgroup import cycle_type, iter_symmetric_group
from exceptions import PartitionError


@pytest.mark.parametrize("parts, expected", [
    ([1, 2, 1], (2, 1, 1)),
    ([3], (3,)),
    ([2, 2], (2, 2)),
])
def test_make_partition_sorts(parts, expected):
    lam = make_partition(parts)
    assert lam.parts == expected
    assert lam.weight == sum(parts)


@pytest.mark.parametrize("parts", [[], [0], [2, -1]])
def test_make_partition_rejects(parts):
    with pytest.raises(PartitionError):
        make_partition(parts)
    with pytest.raises(ValueError):
        make_partition(parts)


def test_exponent_notation():
    assert make_partition([2, 1, 1]).exp_notation() == "2 1^2"
    assert str(make_partition([1, 1, 1])) == "(1^3)"
    assert str(make_partition([3])) == "(3)"
    assert make_partition([2, 1, 1]).multiplicities() == {1: 2, 2: 1}


def test_iter_partitions_order():
    assert [lam.parts for lam in iter_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("parts, n, expected", [
    ([1, 1], 2, 1),
    ([2, 1, 1], 4, 6),
    ([3], 3, 2),
])
def test_class_size_examples(parts, n, expected):
    assert class_size(make_partition(parts), n) == expected


def test_class_size_weight_mismatch():
    with pytest.raises(PartitionError):
        class_size(make_partition([2, 1]), 4)


@pytest.mark.parametrize("n, d, expected", [(3, 3, 2), (4, 2, 6), (5, 3, 20), (2, 3, 0)])
def test_count_d_cycles(n, d, expected):
    assert count_d_cycles(n, d) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_class_size_matches_enumeration(n):
    counts = Counter(cycle_type(g) for g in iter_symmetric_group(n))
    for lam in iter_partitions(n):
        assert class_size(lam, n) == counts[lam]
    assert sum(class_size(lam, n) for lam in iter_partitions(n)) == factorial(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_class_size_matches_enumeration_large(n):
    counts = Counter(cycle_type(g) for g in iter_symmetric_group(n))
    for lam in iter_partitions(n):
        assert class_size(lam, n) == counts[lam]


def test_count_d_cycles_is_hook_class():
    for n in range(2, 9):
        for d in range(2, n + 1):
            assert count_d_cycles(n, d) == class_size(hook_type(d, n), n)
