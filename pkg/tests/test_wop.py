"""W-算子: 解析路径、群代数路径、割并闭式"""
import itertools
import random
from fractions import Fraction

import pytest

from algebra.combinat import iter_partitions, make_partition
from algebra.permgroup import Permutation, canonical_of_type, classify_tuple, iter_class, iter_cycle_tuples
from algebra.psymring import PMonomial, PPolynomial, ZSeries
from exceptions import PermutationError
from operators.wop import (OperatorSpec, apply_operator, apply_to_series, bridge_term,
                           cbar_contribution, commutator, cut_and_join_closed_form,
                           default_beta, delta3_closed_form, dhat_apply, group_route_image, phat,
                           phi_beta_map)
from utils import parse_polynomial as P


def cyc(n, *cycles):
    return Permutation.from_cycles(n, [list(c) for c in cycles])


def monomials(w_max):
    return [PMonomial.from_parts(lam.parts) for w in range(1, w_max + 1) for lam in iter_partitions(w)]


@pytest.mark.parametrize("delta, a, expected", [
    (cyc(4, (1, 2, 3)), (1, 1, 1, 2), [3, 2]),
    (Permutation.identity(2), (2, 5), [2, 5]),
    (cyc(2, (1, 2)), (1, 2), [3]),
])
def test_phat(delta, a, expected):
    assert phat(delta, a) == PMonomial.from_parts(expected)


def test_phat_length_mismatch():
    with pytest.raises(PermutationError):
        phat(cyc(2, (1, 2)), (1, 2, 3))


@pytest.mark.parametrize("delta, a, m, expected", [
    (cyc(4, (1, 2, 3)), (1, 1, 1, 2), PMonomial.from_parts([3, 2]), P("6")),
    (cyc(2, (1, 2)), (1, 1), PMonomial.of({1: 4}), PPolynomial()),
    (Permutation.identity(2), (2, 2), PMonomial.of({2: 2}), P("8")),
])
def test_dhat_apply(delta, a, m, expected):
    assert dhat_apply(delta, a, m) == expected


def test_phi_beta_map():
    beta2 = default_beta(2)
    assert phi_beta_map(beta2, Permutation.identity(2)) == cyc(2, (1, 2))
    assert phi_beta_map(beta2, cyc(2, (1, 2))).is_identity()
    assert phi_beta_map(default_beta(3), cyc(3, (1, 2, 3))).is_identity()
    with pytest.raises(PermutationError):
        phi_beta_map(cyc(3, (1, 2)), Permutation.identity(3))


def test_operator_spec_validation():
    with pytest.raises(PermutationError):
        OperatorSpec.delta(1)
    with pytest.raises(PermutationError):
        OperatorSpec.delta_beta(cyc(3, (1, 2)))
    assert OperatorSpec.delta_beta(cyc(3, (1, 2, 3))).d == 3


@pytest.mark.parametrize("op, poly, expected", [
    (OperatorSpec.delta(2), "p1^2", "p2"),
    (OperatorSpec.delta(3), "p1^3", "2*p3"),
    (OperatorSpec.delta(3), "p3", "p3 + p1^3"),
    (OperatorSpec.cut_and_join(), "p2^2", "4*p4 + 2*p1^2*p2"),
    (OperatorSpec.delta(2), "p1", "0"),
    (OperatorSpec.group_route(3), "p3", "p3 + p1^3"),
])
def test_apply_operator_examples(op, poly, expected):
    assert apply_operator(op, P(poly)) == P(expected)


def test_cut_and_join_closed_form_direct():
    assert cut_and_join_closed_form(P("p1^2")) == P("p2")
    assert cut_and_join_closed_form(P("p2")) == P("p1^2")


@pytest.mark.parametrize("d1, d2, poly", [(2, 3, "p1^4"), (2, 2, "p3 + p1*p2"), (3, 4, "p2^2")])
def test_commutator_examples(d1, d2, poly):
    assert commutator(d1, d2, P(poly)) == 0


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("n", range(1, 7))
def test_main_theorem(d, n):
    for m in monomials(n)[-len(list(iter_partitions(n))):]:
        analytic = apply_operator(OperatorSpec.delta(d), PPolynomial.monomial(m))
        assert analytic == group_route_image(m, d)
        assert analytic.is_homogeneous(n)


@pytest.mark.slow
@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("n", [7, 8])
def test_main_theorem_large(d, n):
    for lam in iter_partitions(n):
        m = PMonomial.from_parts(lam.parts)
        assert apply_operator(OperatorSpec.delta(d), PPolynomial.monomial(m)) == group_route_image(m, d)


def test_delta_two_is_cut_and_join():
    for m in monomials(6):
        f = PPolynomial.monomial(m)
        assert apply_operator(OperatorSpec.delta(2), f) == cut_and_join_closed_form(f)


@pytest.mark.slow
def test_delta_two_is_cut_and_join_large():
    for m in monomials(10)[len(monomials(6)):]:
        f = PPolynomial.monomial(m)
        assert apply_operator(OperatorSpec.delta(2), f) == cut_and_join_closed_form(f)


def test_delta3_closed_form_values():
    assert delta3_closed_form(P("p1^3")) == P("2*p3")
    assert delta3_closed_form(P("p3")) == P("p3 + p1^3")
    assert delta3_closed_form(P("p1^2")) == PPolynomial()
    assert delta3_closed_form(P("p1^3 - 2*p3")) == P("-2*p1^3")


def test_delta3_matches_closed_form_term_by_term():
    for m in monomials(8):
        f = PPolynomial.monomial(m)
        assert apply_operator(OperatorSpec.delta(3), f) == delta3_closed_form(f), m


@pytest.mark.parametrize("d", [2, 3])
def test_beta_independence(d):
    for beta in iter_class(make_partition([d])):
        for m in monomials(8):
            f = PPolynomial.monomial(m)
            assert apply_operator(OperatorSpec.delta_beta(beta), f) == apply_operator(OperatorSpec.delta(d), f)


@pytest.mark.slow
def test_beta_independence_d4():
    for beta in iter_class(make_partition([4])):
        for m in monomials(8):
            f = PPolynomial.monomial(m)
            assert apply_operator(OperatorSpec.delta_beta(beta), f) == apply_operator(OperatorSpec.delta(4), f)


def test_commutativity():
    for m in monomials(8):
        f = PPolynomial.monomial(m)
        for d1, d2 in itertools.combinations(range(2, 5), 2):
            assert commutator(d1, d2, f) == 0


def test_linearity_random():
    rng = random.Random(11)
    pool = monomials(5)
    for _ in range(20):
        f, g = PPolynomial(), PPolynomial()
        for _ in range(3):
            f.add_term(rng.choice(pool), rng.randint(-3, 3))
            g.add_term(rng.choice(pool), rng.randint(-3, 3))
        a, b = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(1, 5), 2)
        for op in (OperatorSpec.delta(2), OperatorSpec.delta(3)):
            assert apply_operator(op, f.scale(a) + g.scale(b)) == \
                apply_operator(op, f).scale(a) + apply_operator(op, g).scale(b)


def test_apply_to_series():
    s = ZSeries(2, 3)
    for m, c in P("p1^2 + p3").items():
        s.add_term(1, m, c)
    image = apply_to_series(OperatorSpec.delta(2), s)
    assert image.z_slice(1) == apply_operator(OperatorSpec.delta(2), P("p1^2 + p3"))
    assert (image.k_max, image.w_max) == (2, 3)


@pytest.mark.parametrize("parts", [[2, 2], [3, 1], [2, 1, 1], [4], [3, 2]])
@pytest.mark.parametrize("d", [2, 3])
def test_class_bridge(parts, d):
    alpha = canonical_of_type(make_partition(parts))
    classes = {(c.type_tau, c.distances)
               for c in (classify_tuple(alpha, t) for t in iter_cycle_tuples(alpha.degree, d))}
    for tau, distances in classes:
        assert cbar_contribution(alpha, tau, distances) == bridge_term(alpha, tau, distances)


def test_bridge_repeated_lengths():
    alpha = cyc(4, (1, 2), (3, 4))
    tau = Permutation.identity(2)
    assert cbar_contribution(alpha, tau, (2, 2)) == P("8*p4")
    assert bridge_term(alpha, tau, (2, 2)) == P("8*p4")
