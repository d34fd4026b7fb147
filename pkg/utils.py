#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""实用工具模块: 多项式文本解析、输出文档格式化与导出"""

import csv
import io
import json
import re
from fractions import Fraction
from pathlib import Path
from tokenize import TokenError
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)
from sympy.polys.polyerrors import PolynomialError

from algebra.combinat import Partition
from algebra.permgroup import CycleTuple, Permutation
from algebra.psymring import PMonomial, PPolynomial, ZSeries
from exceptions import PermutationError, PolynomialSyntaxError
from operators.xmatrix import XPolynomial

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_P_SYMBOL = re.compile(r"^p([1-9]\d*)$")
_ALLOWED_TEXT = re.compile(r"^[p0-9+\-*/^()\s]+$")


def _to_fraction(value) -> Fraction:
    if not value.is_Rational:
        raise PolynomialSyntaxError(f"系数必须是有理数: {value}")
    return Fraction(int(value.p), int(value.q))


def parse_polynomial(text: str) -> PPolynomial:
    """把 'p1^3*p2 + 1/2*p3' 形式的文本解析为 PPolynomial"""
    if not text or not text.strip():
        raise PolynomialSyntaxError("多项式文本为空")
    if not _ALLOWED_TEXT.match(text):
        raise PolynomialSyntaxError(f"多项式文本含有不允许的字符: {text!r}")
    try:
        expr = sympy.expand(parse_expr(text, transformations=_TRANSFORMATIONS, evaluate=True))
    except (SyntaxError, TokenError, TypeError, sympy.SympifyError) as e:
        raise PolynomialSyntaxError(f"无法解析多项式 {text!r}: {e}") from e

    symbols = sorted(expr.free_symbols, key=lambda s: s.name)
    indices = []
    for symbol in symbols:
        match = _P_SYMBOL.match(symbol.name)
        if not match:
            raise PolynomialSyntaxError(f"未知变量 {symbol.name}, 只允许 p1, p2, …")
        indices.append(int(match.group(1)))

    if not symbols:
        return PPolynomial.monomial(PMonomial.unit(), _to_fraction(expr)) if expr != 0 else PPolynomial()
    try:
        poly = sympy.Poly(expr, *symbols)
    except PolynomialError as e:
        raise PolynomialSyntaxError(f"{text!r} 不是 p_k 的多项式: {e}") from e

    result = PPolynomial()
    for exponents, coeff in poly.terms():
        result.add_term(PMonomial.of(dict(zip(indices, exponents))), _to_fraction(coeff))
    return result


def parse_int_list(text: str) -> List[int]:
    """'1,2,3' → [1, 2, 3]"""
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise PermutationError(f"无法解析整数列表 {text!r}: {e}") from e


def parse_cycles(text: str, n: int) -> Permutation:
    """'1,2;3' → (1 2)(3), 循环之间用分号分隔"""
    cycles = [parse_int_list(chunk) for chunk in text.split(";") if chunk.strip()]
    return Permutation.from_cycles(n, [c for c in cycles if c])


def parse_tuple(text: str, n: int) -> CycleTuple:
    return CycleTuple(tuple(parse_int_list(text)), n)


# ---------------------------------------------------------------------------
# 输出文档
# ---------------------------------------------------------------------------

def _coeff_text(c: Fraction) -> str:
    return str(c)


def polynomial_to_json(f: PPolynomial) -> str:
    terms = [{"coeff": _coeff_text(c), "monomial": [list(e) for e in m.exponents]}
             for m, c in f.sorted_terms()]
    return json.dumps({"terms": terms})


def series_to_json(s: ZSeries) -> str:
    terms = [{"coeff": _coeff_text(c), "monomial": [list(e) for e in m.exponents], "z": k}
             for (k, m), c in s.sorted_items()]
    return json.dumps({"terms": terms})


def xpolynomial_to_json(f: XPolynomial) -> str:
    terms = [{"coeff": _coeff_text(c), "monomial": [[a, b, e] for (a, b), e in m.exponents]}
             for m, c in _sorted_x_terms(f)]
    return json.dumps({"N": f.N, "terms": terms})


def _sorted_x_terms(f: XPolynomial):
    return sorted(f.items(), key=lambda t: (-t[0].degree, t[0].exponents))


def rows_to_csv(rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def polynomial_to_csv(f: PPolynomial) -> str:
    return rows_to_csv([["monomial", "coeff"]] + [[str(m), _coeff_text(c)] for m, c in f.sorted_terms()])


def xpolynomial_to_csv(f: XPolynomial) -> str:
    """矩阵变量多项式: 单项式写成 X_ab^e 的乘积"""
    return rows_to_csv([["N", "monomial", "coeff"]]
                     + [[str(f.N), str(m), _coeff_text(c)] for m, c in _sorted_x_terms(f)])


def series_to_csv(s: ZSeries) -> str:
    return rows_to_csv([["z", "monomial", "coeff"]]
                     + [[str(k), str(m), _coeff_text(c)] for (k, m), c in s.sorted_items()])


def series_to_text(s: ZSeries) -> str:
    ks = sorted({k for k, _ in s.coeffs})
    return "\n".join(f"z^{k}: {s.z_slice(k)}" for k in ks) if ks else "0"


HurwitzRow = Tuple[int, int, int, Partition, int, int]


def hurwitz_to_csv(rows: List[HurwitzRow]) -> str:
    return rows_to_csv([["n", "d", "k", "alpha", "h", "hhat"]]
                     + [[str(n), str(d), str(k), f"({alpha.exp_notation()})", str(h), str(hh)]
                        for n, d, k, alpha, h, hh in rows])


def hurwitz_to_json(rows: List[HurwitzRow]) -> str:
    return json.dumps({"rows": [
        {"n": n, "d": d, "k": k, "alpha": list(alpha.parts), "h": h, "hhat": hh}
        for n, d, k, alpha, h, hh in rows]})


def hurwitz_to_text(rows: List[HurwitzRow]) -> str:
    lines = [f"{'n':>3}{'d':>3}{'k':>3}  {'α':<12}{'h':>10}{'ĥ':>10}"]
    for n, d, k, alpha, h, hh in rows:
        lines.append(f"{n:>3}{d:>3}{k:>3}  {str(alpha):<12}{h:>10}{hh:>10}")
    return "\n".join(lines)


def classification_to_dict(alpha: Permutation, sigma_bar: CycleTuple,
                           tau: Permutation, distances: Tuple[int, ...]) -> Dict:
    return {"alpha": str(alpha), "tuple": list(sigma_bar.points),
            "tau": str(tau), "distances": list(distances)}


def export_document(document: str, output_path: Optional[str] = None,
                    command: str = "wop") -> str:
    """把输出文档写入文件, 返回路径"""
    if output_path is None:
        output_path = f"{command}_result.txt"
    Path(output_path).write_text(document + "\n", encoding="utf-8")
    return output_path


def classification_to_csv(document: Dict) -> str:
    row = [" ".join(map(str, v)) if isinstance(v, list) else v for v in document.values()]
    return rows_to_csv([list(document.keys()), row])
