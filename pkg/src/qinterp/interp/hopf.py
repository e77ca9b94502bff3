"""Schur expansions of ``F_lambda``, Hopf norms and the expansion route to ``D``."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Tuple

from ..errors import IntegrityError
from ..partitions import Partition
from ..qring import LaurentV, RationalQ, poch
from ..symfun import EvalPoint, eval_sym, hopf_form, schur, schur_expansion
from .fpoly import F_poly


def _one_minus_q(exponent: int) -> LaurentV:
    return LaurentV({0: 1, 2 * exponent: -1})


@lru_cache(maxsize=None)
def schur_coefficients(partition: Partition, nvars: int) -> Dict[Partition, LaurentV]:
    """``b_{lambda,mu}`` with ``F_lambda = sum_mu b_{lambda,mu} s_mu``."""

    return schur_expansion(F_poly(partition, nvars))


def staircase_schur(partition: Partition, nvars: int) -> LaurentV:
    """``s_mu(q^{1-N}, ..., 1)``."""

    return eval_sym(schur(partition, nvars), EvalPoint.staircase(nvars))


def hopf_norm(partition: Partition, nvars: int) -> LaurentV:
    """``(F_lambda, F_lambda) = q^{-|lambda| + 2 binom(N,3)} prod (1 - q^{N + c})``."""

    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")
    value = LaurentV.q(-partition.size + 2 * comb(nvars, 3))
    for content in partition.contents:
        value = value * _one_minus_q(nvars + content)
    return value


def gram_matrix(partitions: Iterable[Partition], nvars: int) -> Dict[Tuple[Partition, Partition], LaurentV]:
    """Pairings ``(F_lambda, F_nu)`` computed through Schur expansions."""

    items = list(partitions)
    return {
        (lam, nu): hopf_form(F_poly(lam, nvars), F_poly(nu, nvars))
        for lam in items
        for nu in items
    }


def orthogonality_failures(partitions: Iterable[Partition], nvars: int) -> Dict[Tuple[Partition, Partition], LaurentV]:
    """Entries of the Gram matrix that differ from ``delta * hopf_norm``."""

    failures = {}
    for (lam, nu), value in gram_matrix(partitions, nvars).items():
        expected = hopf_norm(lam, nvars) if lam == nu else LaurentV.zero()
        if value != expected:
            failures[(lam, nu)] = value
    return failures


def d_entry_hopf(outer: Partition, inner: Partition, nvars: int) -> RationalQ:
    """``b_{lambda,mu} s_mu(q^{1-N}, ..., 1) / (F_lambda, F_lambda)`` for ``lambda = outer``, ``mu = inner``."""

    coefficient = schur_coefficients(outer, nvars).get(inner)
    if coefficient is None or coefficient.is_zero:
        return RationalQ(0)
    return RationalQ(coefficient * staircase_schur(inner, nvars), hopf_norm(outer, nvars))


def homfly_coeffs(outer: Partition, inner: Partition, nvars: int) -> RationalQ:
    """``b-bar_{lambda,mu}``: the Schur coefficient with its ``A = q^N`` dependence stripped."""

    if not outer.contains(inner):
        return RationalQ(0)
    coefficient = schur_coefficients(outer, nvars).get(inner, LaurentV.zero())
    normalizer = LaurentV.q(comb(nvars, 3) + nvars * inner.size, -1 if comb(nvars, 2) % 2 else 1)
    inner_cells = {(cell.row, cell.col) for cell in inner.cells}
    for cell in outer.cells:
        if (cell.row, cell.col) not in inner_cells:
            normalizer = normalizer * _one_minus_q(nvars + cell.content)
    return RationalQ(coefficient, normalizer)


def homfly_stable(outer: Partition, inner: Partition, nvars_list: Iterable[int]) -> RationalQ:
    """Compute ``b-bar`` at every ``N`` given and require a single value."""

    values = {n: homfly_coeffs(outer, inner, n) for n in nvars_list if outer.length <= n}
    distinct = set(values.values())
    if len(distinct) != 1:
        raise IntegrityError(f"b-bar for {outer},{inner} depends on N: {values}")
    return distinct.pop()


def one_row_coeffs(m: int, j: int) -> RationalQ:
    """``(-1)^j q^{j(j-3)/2} / (q;q)_{m-j}``."""

    if not 0 <= j <= m:
        return RationalQ(0)
    return RationalQ(LaurentV.v(j * (j - 3), -1 if j % 2 else 1), poch(m - j))


__all__ = [
    "d_entry_hopf",
    "gram_matrix",
    "homfly_coeffs",
    "homfly_stable",
    "hopf_norm",
    "one_row_coeffs",
    "orthogonality_failures",
    "schur_coefficients",
    "staircase_schur",
]
