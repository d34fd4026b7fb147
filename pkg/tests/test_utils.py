"""多项式文本解析与输出格式"""
import json
from fractions import Fraction

import pytest

from algebra.combinat import make_partition
from algebra.psymring import PMonomial, PPolynomial, ZSeries
from exceptions import PermutationError, PolynomialSyntaxError
from operators.xmatrix import trace_power
from utils import (hurwitz_to_csv, hurwitz_to_text, parse_cycles, parse_polynomial, parse_tuple,
                   polynomial_to_json, series_to_json, xpolynomial_to_csv)


def test_parse_polynomial():
    f = parse_polynomial("p1^3*p2 + 1/2*p3")
    assert f.coefficient(PMonomial.of({1: 3, 2: 1})) == 1
    assert f.coefficient(PMonomial.of({3: 1})) == Fraction(1, 2)
    assert len(f.terms) == 2


def test_parse_polynomial_expands_and_ignores_whitespace():
    assert parse_polynomial(" (p1 + p2)^2 ") == parse_polynomial("p1^2 + 2*p1*p2 + p2^2")
    assert parse_polynomial("p2 - p2") == PPolynomial()
    assert parse_polynomial("3") == PPolynomial.one().scale(3)
    assert parse_polynomial("p12") == PPolynomial.p(12)


@pytest.mark.parametrize("text", ["", "p1 +", "q1", "p0", "p1^-1", "p1/p2", "x*p1", "p1.5"])
def test_parse_polynomial_rejects(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial(text)


def test_parse_cycles_and_tuple():
    g = parse_cycles("1,2;3", 3)
    assert str(g) == "(1 2)(3)"
    assert parse_tuple("3,2,1", 3).points == (3, 2, 1)
    with pytest.raises(PermutationError):
        parse_cycles("1,a", 3)
    with pytest.raises(PermutationError):
        parse_tuple("1,1", 3)


def test_polynomial_json_schema():
    document = json.loads(polynomial_to_json(parse_polynomial("1/2*p2")))
    assert document == {"terms": [{"coeff": "1/2", "monomial": [[2, 1]]}]}


def test_series_json_has_z():
    s = ZSeries(1, 2)
    s.add_term(1, PMonomial.of({2: 1}), Fraction(1, 2))
    assert json.loads(series_to_json(s)) == {"terms": [{"coeff": "1/2", "monomial": [[2, 1]], "z": 1}]}


def test_hurwitz_csv():
    rows = [(3, 2, 2, make_partition([3]), 6, 6), (3, 2, 2, make_partition([2, 1]), 0, 0),
            (3, 2, 2, make_partition([1, 1, 1]), 0, 3)]
    assert hurwitz_to_csv(rows).splitlines() == [
        "n,d,k,alpha,h,hhat", "3,2,2,(3),6,6", "3,2,2,(2 1),0,0", "3,2,2,(1^3),0,3"]


def test_hurwitz_text_keeps_degree_columns():
    rows = [(4, 3, 1, make_partition([3, 1]), 8, 8)]
    assert [line.split() for line in hurwitz_to_text(rows).splitlines()] == [
        ["n", "d", "k", "α", "h", "ĥ"], ["4", "3", "1", "(3", "1)", "8", "8"]]


def test_xpolynomial_csv():
    assert xpolynomial_to_csv(trace_power(2, 2)).splitlines() == [
        "N,monomial,coeff", "2,X11^2,1", "2,X12*X21,2", "2,X22^2,1"]
