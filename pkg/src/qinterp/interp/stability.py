"""Dependence of ``F_lambda`` on ``N``, column addition and multiplication by ``x_1...x_N``."""

from __future__ import annotations

from itertools import combinations, product
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from ..partitions import Partition, sub_partitions
from ..qring import LaurentV
from ..symfun import SymPoly, e_top
from .fpoly import F_poly, full_product
from .matrices import stable_c_entry
from .onevar import f_at_q_power, f_uni


def restrict_last_var(partition: Partition, nvars: int) -> SymPoly:
    """``F_{lambda;N}(x_1, ..., x_{N-1}, 1)`` computed from ``F_{lambda;N}``."""

    if nvars < 2:
        raise ValueError(f"restriction needs at least two variables, got {nvars}")
    return F_poly(partition, nvars).restrict_last()


def restricted_expected(partition: Partition, nvars: int) -> SymPoly:
    """``(-1)^{N-1} q^{binom(N-1,2)} F_{lambda;N-1}(q x)`` when ``lambda_N = 0``, else zero."""

    if partition.length >= nvars:
        return SymPoly.zero(nvars - 1)
    sign = -1 if (nvars - 1) % 2 else 1
    smaller = F_poly(partition, nvars - 1).scale_variables(2)
    return smaller.scale(LaurentV.q(comb(nvars - 1, 2), sign))


def restriction_check(partition: Partition, nvars: int) -> bool:
    return restrict_last_var(partition, nvars) == restricted_expected(partition, nvars)


def stable_c_failures(bound: Partition, nvars_list: Sequence[int]) -> List[Tuple[Partition, Partition]]:
    """Pairs whose normalized entry ``(-1)^{binom(N,2)} q^{-binom(N,3)} c_{lambda,mu}`` varies with ``N``."""

    smallest = min(nvars_list)
    ideal = [p for p in sub_partitions(bound) if p.length <= smallest]
    failures = []
    for inner in ideal:
        for outer in ideal:
            values = {stable_c_entry(inner, outer, n) for n in nvars_list}
            if len(values) != 1:
                failures.append((inner, outer))
    return failures


def f_product(k: int, nvars: int) -> SymPoly:
    """``f_k(x_1) ... f_k(x_N)``."""

    return SymPoly.from_full_terms(nvars, full_product([f_uni(k)] * nvars))


def add_column_check(partition: Partition, k: int, nvars: int) -> bool:
    """``F_{lambda+k^N} = q^{k binom(N,2)} prod f_k(x_i) F_lambda(q^k x)``."""

    left = F_poly(partition.add_column(nvars, k), nvars)
    shifted = F_poly(partition, nvars).scale_variables(2 * k)
    right = (f_product(k, nvars) * shifted).scale(LaurentV.q(k * comb(nvars, 2)))
    return left == right


def mul_by_eN(partition: Partition, nvars: int) -> Dict[Partition, LaurentV]:
    """Coefficients of ``x_1...x_N F_lambda`` in the ``F`` basis."""

    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")
    prefactor = -partition.size - comb(nvars, 2)
    result: Dict[Partition, LaurentV] = {}
    for size in range(nvars + 1):
        for subset in combinations(range(nvars), size):
            vector = [1 if i in subset else 0 for i in range(nvars)]
            grown = partition.plus(vector)
            if grown is None:
                continue
            value = LaurentV.q(prefactor, -1 if size % 2 else 1)
            result[grown] = result.get(grown, LaurentV.zero()) + value
    return dict(sorted(result.items()))


def combine(coefficients: Dict[Partition, LaurentV], nvars: int) -> SymPoly:
    total = SymPoly.zero(nvars)
    for partition, value in coefficients.items():
        total = total + F_poly(partition, nvars).scale(value)
    return total


def mul_by_eN_check(partition: Partition, nvars: int) -> bool:
    return e_top(nvars) * F_poly(partition, nvars) == combine(mul_by_eN(partition, nvars), nvars)


def resolve_index(vector: Sequence[int], nvars: int) -> Optional[Tuple[int, Partition]]:
    """Rewrite ``det(f_{a_i+N-i}(x_j))/Vandermonde`` for an arbitrary vector ``a`` as ``sign * F_mu``."""

    shifted = [a + nvars - 1 - i for i, a in enumerate(vector)]
    if len(set(shifted)) != len(shifted) or min(shifted) < 0:
        return None
    order = sorted(range(nvars), key=lambda i: -shifted[i])
    sign = Permutation(order).signature()
    parts = tuple(shifted[i] - (nvars - 1 - rank) for rank, i in enumerate(order))
    return sign, Partition(parts)


def inv_eN_series(partition: Partition, nvars: int, order: int) -> Dict[Partition, LaurentV]:
    """``(x_1...x_N)^{-1} F_lambda = q^{binom(N,2)} sum_v q^{|lambda|+|v|} F_{lambda+v}``, truncated at ``|v| <= order``."""

    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    padded = partition.padded(nvars)
    result: Dict[Partition, LaurentV] = {}
    for shift in product(range(order + 1), repeat=nvars):
        if sum(shift) > order:
            continue
        resolved = resolve_index([a + s for a, s in zip(padded, shift)], nvars)
        if resolved is None:
            continue
        sign, target = resolved
        value = LaurentV.q(comb(nvars, 2) + partition.size + sum(shift), sign)
        total = result.get(target, LaurentV.zero()) + value
        if total.is_zero:
            result.pop(target, None)
        else:
            result[target] = total
    return dict(sorted(result.items()))


def inv_eN_check(partition: Partition, nvars: int, order: int) -> bool:
    """Multiply the truncated inverse by ``x_1...x_N`` in ``F`` coordinates and compare below the cut."""

    series = inv_eN_series(partition, nvars, order)
    limit = partition.size + order
    product_coefficients: Dict[Partition, LaurentV] = {}
    for target, value in series.items():
        for grown, coefficient in mul_by_eN(target, nvars).items():
            if grown.size > limit:
                continue
            product_coefficients[grown] = product_coefficients.get(grown, LaurentV.zero()) + value * coefficient
    cleaned = {p: v for p, v in product_coefficients.items() if not v.is_zero}
    return cleaned == {partition: LaurentV.one()}


def x_inverse_node_values(limit: int) -> List[LaurentV]:
    """``u_j = sum_{m<=j} f_m(q^{-j}) q^m`` for ``j = 0..limit``."""

    values = []
    for j in range(limit + 1):
        total = LaurentV.zero()
        for m in range(j + 1):
            total = total + f_at_q_power(m, -j).shift_q(m)
        values.append(total)
    return values


def stability_sweep(bound: Partition, nvars_list: Iterable[int]) -> List[str]:
    """Run the restriction identity on every partition under ``bound`` for each ``N``."""

    failures = []
    for nvars in nvars_list:
        for partition in sub_partitions(bound):
            if partition.length <= nvars and not restriction_check(partition, nvars):
                failures.append(f"{partition} at N={nvars}")
    return failures


__all__ = [
    "add_column_check",
    "combine",
    "f_product",
    "inv_eN_check",
    "inv_eN_series",
    "mul_by_eN",
    "mul_by_eN_check",
    "resolve_index",
    "restrict_last_var",
    "restricted_expected",
    "restriction_check",
    "stability_sweep",
    "stable_c_failures",
    "x_inverse_node_values",
]
