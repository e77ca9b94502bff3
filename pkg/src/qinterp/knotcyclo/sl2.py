"""Habiro's cyclotomic expansion for sl2, used as a cross-check of the gl2 machinery."""

from __future__ import annotations

from typing import Dict, List, Sequence

from ..errors import NotDivisible, NotLaurent
from ..partitions import Partition
from ..qring import LaurentV, balanced_qbinom, balanced_qnum, curly, curly_factorial, divide_exact
from .expansion import a_coeffs
from .tables import KnotTable


def sl2_sigma_eigen(m: int, j: int) -> LaurentV:
    """Scalar of ``sigma_m`` on ``V_j``: ``prod_{i=1}^m (q^{j+1} + q^{-j-1} - q^i - q^{-i})``."""

    if m < 0 or j < 0:
        raise ValueError(f"indices must be nonnegative, got m={m}, j={j}")
    top = LaurentV.q(j + 1) + LaurentV.q(-j - 1)
    value = LaurentV.one()
    for i in range(1, m + 1):
        value = value * (top - LaurentV.q(i) - LaurentV.q(-i))
    return value


def sl2_a_coeffs(values: Sequence[LaurentV]) -> List[LaurentV]:
    """``a_n = sum_i (-1)^{n-i} {2i+2}{i+1} / ({n+i+2}! {n-i}!) phi_i`` for each available ``n``."""

    result = []
    for n in range(len(values)):
        numerator = LaurentV.zero()
        for i in range(n + 1):
            term = curly(2 * i + 2) * curly(i + 1) * balanced_qbinom(2 * n + 2, n - i) * values[i]
            numerator = numerator + (term if (n - i) % 2 == 0 else -term)
        try:
            result.append(divide_exact(numerator, curly_factorial(2 * n + 2)))
        except NotDivisible as exc:
            raise NotLaurent(f"sl2 coefficient a_{n} is not a Laurent polynomial", n, exc.remainder) from exc
    return result


def sl2_reconstruct(coefficients: Sequence[LaurentV], j: int) -> LaurentV:
    total = LaurentV.zero()
    for m, a in enumerate(coefficients[: j + 1]):
        total = total + a * sl2_sigma_eigen(m, j)
    return total


def sl2_pn_expansion(n: int) -> List[LaurentV]:
    """Coefficients of ``V_0..V_n`` in ``P_n``: ``(-1)^{n-i} [2i+2]/[n+i+2] [2n+1, n+1+i]``."""

    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    result = []
    for i in range(n + 1):
        value = divide_exact(balanced_qnum(2 * i + 2) * balanced_qbinom(2 * n + 1, n + 1 + i), balanced_qnum(n + i + 2))
        result.append(value if (n - i) % 2 == 0 else -value)
    return result


def sl2_pn_product(n: int) -> List[LaurentV]:
    """Expand ``prod_{i<n} (V_1 - v^{2i+1} - v^{-2i-1})`` with ``V_1 V_k = V_{k+1} + V_{k-1}``."""

    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    current = [LaurentV.one()]
    for i in range(n):
        shift = LaurentV({2 * i + 1: 1, -2 * i - 1: 1})
        grown = [LaurentV.zero()] * (len(current) + 1)
        for k, c in enumerate(current):
            grown[k + 1] = grown[k + 1] + c
            if k > 0:
                grown[k - 1] = grown[k - 1] + c
            grown[k] = grown[k] - c * shift
        current = grown
    return current


def sl2_values(table: KnotTable, n_max: int) -> List[LaurentV]:
    """``J_K(V_j)`` read from a gl2 table through the one-row colors."""

    if table.nvars != 2:
        raise ValueError(f"sl2 values are read from N=2 tables, got N={table.nvars}")
    return [table.value(Partition.of(j)) for j in range(n_max + 1)]


def habiro_comparison(table: KnotTable, n_max: int) -> List[Dict[str, object]]:
    """Rows ``(n, sl2 a_n, gl2 a_(n))`` side by side."""

    sl2 = sl2_a_coeffs(sl2_values(table, n_max))
    gl2 = a_coeffs(table, Partition.of(n_max), route="substitution")
    rows = []
    for n in range(n_max + 1):
        one_row = Partition.of(n)
        gl2_value = gl2.get(one_row)
        rows.append({"n": n, "sl2": sl2[n], "gl2": gl2_value, "equal": sl2[n] == gl2_value})
    return rows


__all__ = [
    "habiro_comparison",
    "sl2_a_coeffs",
    "sl2_pn_expansion",
    "sl2_pn_product",
    "sl2_reconstruct",
    "sl2_sigma_eigen",
    "sl2_values",
]
