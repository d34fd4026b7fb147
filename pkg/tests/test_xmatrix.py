"""变量矩阵实现: D_{ab}、正规序与 (1/d):tr(D^d):"""
import pytest

from algebra.combinat import iter_partitions
from algebra.permgroup import Permutation, canonical_of_type, iter_symmetric_group
from algebra.psymring import PMonomial, PPolynomial, p_to_x_subst
from checks.suites import check_cycle_action, check_intertwining, check_per_monomial
from exceptions import DegreeMismatchError, TruncationError
from operators.wop import OperatorSpec, apply_operator
from operators.xmatrix import (XMonomial, XPolynomial, apply_D, apply_D_sequential, apply_D_tuple,
                               apply_w_truncated, trace_power, x_monomial_of_permutation)
from utils import parse_polynomial as P


def X(N, **entries):
    """X(3, e12=1, e23=1) → X12*X23"""
    mapping = {(int(k[1]), int(k[2])): e for k, e in entries.items()}
    return XPolynomial.monomial(XMonomial.of(mapping, N))


def test_trace_power_examples():
    assert trace_power(1, 3) == X(1, e11=3)
    assert trace_power(2, 1) == X(2, e11=1) + X(2, e22=1)
    assert trace_power(2, 2) == X(2, e11=2) + X(2, e12=1, e21=1).scale(2) + X(2, e22=2)


def test_apply_D_examples():
    assert apply_D(2, 1, X(3, e12=1, e23=1, e31=1)) == X(3, e22=1, e23=1, e31=1)
    assert apply_D(1, 1, X(1, e11=1)) == X(1, e11=1)
    assert apply_D(1, 2, X(2, e11=1)).is_zero()


def test_apply_D_out_of_range():
    with pytest.raises(TruncationError):
        apply_D(1, 3, X(2, e11=1))
    with pytest.raises(TruncationError):
        XMonomial.of({(1, 3): 1}, 2)


def test_apply_D_tuple_examples():
    # 箭图 1→2→3→1 变为 1→3→2→1
    assert apply_D_tuple([1, 2, 3], X(3, e12=1, e23=1, e31=1)) == X(3, e13=1, e32=1, e21=1)
    assert apply_D_tuple([1, 1], X(1, e11=2)) == X(1, e11=2).scale(2)
    assert apply_D_tuple([1, 2], X(2, e11=1)).is_zero()


def test_normal_ordering_matters():
    f = X(1, e11=1)
    assert apply_D_tuple([1, 1], f).is_zero()
    assert apply_D_sequential([(1, 1), (1, 1)], f) == f


def test_apply_w_truncated_examples():
    assert apply_w_truncated(2, X(1, e11=2)) == X(1, e11=2)
    assert apply_w_truncated(3, X(1, e11=1)).is_zero()
    assert apply_w_truncated(2, p_to_x_subst(P("p1^2"), 2)) == p_to_x_subst(P("p2"), 2)


def test_x_monomial_of_permutation():
    g = Permutation.from_cycles(3, [[1, 2, 3]])
    assert x_monomial_of_permutation(g, (1, 1, 2)) == XMonomial.of({(1, 1): 1, (1, 2): 1, (2, 1): 1}, 2)
    assert x_monomial_of_permutation(Permutation.identity(1), (5,)) == XMonomial.of({(5, 5): 1}, 5)
    swap = Permutation.from_cycles(2, [[1, 2]])
    assert x_monomial_of_permutation(swap, (2, 3), 4) == XMonomial.of({(2, 3): 1, (3, 2): 1}, 4)
    with pytest.raises(TruncationError):
        x_monomial_of_permutation(swap, (2, 3), 2)
    with pytest.raises(DegreeMismatchError):
        x_monomial_of_permutation(swap, (1,))


def test_x_polynomial_str():
    assert str(X(2, e11=2) + X(2, e12=1, e21=1).scale(2)) == "X11^2 + 2*X12*X21"


@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("d", [2, 3])
def test_substitution_intertwining(N, d):
    for w in range(1, 4):
        for lam in iter_partitions(w):
            ok, detail = check_intertwining(d, lam.parts, N)
            assert ok, detail


@pytest.mark.slow
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_substitution_intertwining_weight_four(N):
    for d in (2, 3):
        for lam in iter_partitions(4):
            f = PPolynomial.monomial(PMonomial.from_parts(lam.parts))
            assert apply_w_truncated(d, p_to_x_subst(f, N)) == \
                p_to_x_subst(apply_operator(OperatorSpec.delta(d), f), N)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("d", [2, 3])
def test_per_monomial_identity(n, d):
    for g in iter_symmetric_group(n):
        ok, detail = check_per_monomial(d, g.images, 3)
        assert ok, detail


@pytest.mark.slow
@pytest.mark.parametrize("d", [2, 3])
def test_per_monomial_identity_n4(d):
    for g in iter_symmetric_group(4):
        ok, detail = check_per_monomial(d, g.images, 3)
        assert ok, detail


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("d", [2, 3])
def test_cycle_action(n, d):
    if d > n:
        return
    for lam in iter_partitions(n):
        ok, detail = check_cycle_action(d, canonical_of_type(lam).images)
        assert ok, detail
