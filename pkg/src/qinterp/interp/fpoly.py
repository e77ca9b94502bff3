"""Interpolation polynomials ``F_lambda`` in ``N`` variables.

``F_lambda = det(f_{lambda_i+N-i}(x_j)) / prod_{i<j}(x_i - x_j)``. The primary
construction applies the divided-difference operator of the longest
permutation to ``f_{lambda_1+N-1}(x_1) ... f_{lambda_N}(x_N)``; the
determinant divided by the Vandermonde in sympy is the independent check.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Dict, List, Sequence, Tuple

import sympy
from sympy.combinatorics import Permutation

from ..errors import IntegrityError
from ..partitions import D_N, Partition
from ..qring import LaurentV, UniPoly
from ..symfun import SymPoly, alternant, schur
from .onevar import f_uni, monomial_to_f

Exponents = Tuple[int, ...]
FullPoly = Dict[Exponents, LaurentV]

_V = sympy.Symbol("v")


def _accumulate(target: FullPoly, key: Exponents, value: LaurentV) -> None:
    total = target.get(key, LaurentV.zero()) + value
    if total.is_zero:
        target.pop(key, None)
    else:
        target[key] = total


def full_product(factors: Sequence[UniPoly]) -> FullPoly:
    """Expand ``factors[0](x_1) * factors[1](x_2) * ...`` into monomials."""

    result: FullPoly = {(): LaurentV.one()}
    for factor in factors:
        grown: FullPoly = {}
        for key, value in result.items():
            for degree, coefficient in enumerate(factor.coeffs):
                if coefficient.is_zero:
                    continue
                _accumulate(grown, key + (degree,), value * coefficient)
        result = grown
    return result


def divided_difference(poly: FullPoly, index: int) -> FullPoly:
    """``(p - s_i p) / (x_i - x_{i+1})`` on 0-based positions ``index, index+1``."""

    result: FullPoly = {}
    for key, value in poly.items():
        a, b = key[index], key[index + 1]
        if a == b:
            continue
        sign = 1 if a > b else -1
        high, low = max(a, b), min(a, b)
        term = value if sign > 0 else -value
        for k in range(high - low):
            new_key = list(key)
            new_key[index] = high - 1 - k
            new_key[index + 1] = low + k
            _accumulate(result, tuple(new_key), term)
    return result


def longest_word(nvars: int) -> List[int]:
    """Reduced word ``s_1 (s_2 s_1) (s_3 s_2 s_1) ...`` as 0-based indices."""

    word: List[int] = []
    for k in range(1, nvars):
        word.extend(range(k - 1, -1, -1))
    return word


def _check_length(partition: Partition, nvars: int) -> None:
    if nvars < 1:
        raise ValueError(f"number of variables must be positive, got {nvars}")
    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")


@lru_cache(maxsize=None)
def F_poly(partition: Partition, nvars: int) -> SymPoly:
    """``F_lambda(x_1, ..., x_N)`` by divided differences."""

    _check_length(partition, nvars)
    poly = full_product([f_uni(value) for value in partition.shifted(nvars)])
    for index in reversed(longest_word(nvars)):
        poly = divided_difference(poly, index)
    return SymPoly.from_full_terms(nvars, poly)


def F_poly_determinant(partition: Partition, nvars: int) -> SymPoly:
    """``F_lambda`` as an exact sympy quotient of the alternant by the Vandermonde."""

    _check_length(partition, nvars)
    gens = sympy.symbols(f"x1:{nvars + 1}")
    columns = [
        [sum(_laurent_expr(c) * g**d for d, c in enumerate(f_uni(value).coeffs)) for g in gens]
        for value in partition.shifted(nvars)
    ]
    determinant = sympy.Integer(0)
    for arrangement in permutations(range(nvars)):
        term = sympy.Integer(Permutation(list(arrangement)).signature())
        for row, column in enumerate(arrangement):
            term *= columns[row][column]
        determinant += term
    numerator = sympy.Poly(sympy.expand(determinant), *gens, _V, domain="ZZ")
    vandermonde = alternant(tuple(range(nvars - 1, -1, -1)), nvars)
    denominator = sympy.Poly(vandermonde.as_expr(), *gens, _V, domain="ZZ")
    quotient = numerator.exquo(denominator)
    full: FullPoly = {}
    for monom, coefficient in quotient.terms():
        _accumulate(full, tuple(monom[:nvars]), LaurentV.v(monom[nvars], int(coefficient)))
    return SymPoly.from_full_terms(nvars, full)


def _laurent_expr(value: LaurentV) -> sympy.Expr:
    return sympy.Add(*[c * _V**e for e, c in value.coeffs.items()])


def cross_check_F(partition: Partition, nvars: int) -> SymPoly:
    """Compare both constructions; raise :class:`IntegrityError` on mismatch."""

    primary = F_poly(partition, nvars)
    oracle = F_poly_determinant(partition, nvars)
    if primary != oracle:
        raise IntegrityError(f"F{partition} at N={nvars}: divided differences disagree with the determinant")
    logging.debug("F%s at N=%d agrees with the determinant route", partition, nvars)
    return primary


def leading_coefficient_sign(partition: Partition, nvars: int) -> LaurentV:
    """``(-1)^{|lambda| + binom(N,2)} q^{D_N(lambda)}``."""

    sign = -1 if (partition.size + comb(nvars, 2)) % 2 else 1
    return LaurentV.q(D_N(partition, nvars), sign)


def leading_term_check(partition: Partition, nvars: int) -> bool:
    """The top-degree part of ``F_lambda`` is ``(-1)^{|lambda|+binom(N,2)} q^{D_N} s_lambda``."""

    poly = F_poly(partition, nvars)
    expected = schur(partition, nvars).scale(leading_coefficient_sign(partition, nvars))
    return poly.degree == partition.size and poly.top_degree_part() == expected


def one_row_partial_expansion(n: int) -> SymPoly:
    """``F_{(n)}(x, y) = sum_i f_i(y) (-q^i) f_{n-i}(q^{i+1} x)`` at ``N = 2``."""

    if n < 0:
        raise ValueError(f"row length must be nonnegative, got {n}")
    full: FullPoly = {}
    for i in range(n + 1):
        first = f_uni(n - i).scale_variable(LaurentV.q(i + 1)) * LaurentV.q(i, -1)
        for key, value in full_product([first, f_uni(i)]).items():
            _accumulate(full, key, value)
    return SymPoly.from_full_terms(2, full)


def nonsymmetric_coeffs(partition: Partition, nvars: int) -> Dict[Exponents, LaurentV]:
    """Coefficients ``b_m`` with ``F_lambda = sum b_m f_{m_1}(x_1) ... f_{m_N}(x_N)``."""

    result: FullPoly = {}
    for key, value in F_poly(partition, nvars).expand().items():
        partial: FullPoly = {(): value}
        for exponent in key:
            grown: FullPoly = {}
            for prefix, coefficient in partial.items():
                for b, k in enumerate(monomial_to_f(exponent)):
                    if not k.is_zero:
                        _accumulate(grown, prefix + (b,), coefficient * k)
            partial = grown
        for index, coefficient in partial.items():
            _accumulate(result, index, coefficient)
    return dict(sorted(result.items()))


def from_nonsymmetric(coefficients: Dict[Exponents, LaurentV], nvars: int) -> SymPoly:
    full: FullPoly = {}
    for index, coefficient in coefficients.items():
        for key, value in full_product([f_uni(m) for m in index]).items():
            _accumulate(full, key, value * coefficient)
    return SymPoly.from_full_terms(nvars, full)


__all__ = [
    "F_poly",
    "F_poly_determinant",
    "cross_check_F",
    "divided_difference",
    "from_nonsymmetric",
    "full_product",
    "leading_coefficient_sign",
    "leading_term_check",
    "longest_word",
    "nonsymmetric_coeffs",
    "one_row_partial_expansion",
]
