"""Evaluation matrix ``C`` of interpolation polynomials at nodes and its inverse ``D``.

Entries are stored under ``(inner, outer)`` with ``inner`` contained in
``outer``: ``c[inner, outer] = F_inner(q^{-outer_i - N + i})``.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from ..errors import IntegrityError
from ..partitions import Partition, sub_partitions
from ..qring import LaurentV, RationalQ
from ..symfun import EvalPoint, eval_sym
from .fpoly import F_poly
from .hopf import d_entry_hopf

DEFAULT_WORKERS = int(os.getenv("QINTERP_WORKERS", "4"))

Pair = Tuple[Partition, Partition]


def _one_minus_q(exponent: int) -> LaurentV:
    return LaurentV({0: 1, 2 * exponent: -1})


def prefetch(partitions: Iterable[Partition], nvars: int, workers: Optional[int] = None) -> None:
    """Build ``F_lambda`` for every partition in parallel; results land in the memo."""

    items = list(partitions)
    count = workers or DEFAULT_WORKERS
    if count <= 1 or len(items) <= 1:
        for partition in items:
            F_poly(partition, nvars)
        return
    logging.info("Building %d interpolation polynomials at N=%d with %d workers", len(items), nvars, count)
    with ThreadPoolExecutor(max_workers=count) as executor:
        list(executor.map(lambda p: F_poly(p, nvars), items))


@lru_cache(maxsize=None)
def c_entry(inner: Partition, outer: Partition, nvars: int) -> LaurentV:
    """``F_inner`` evaluated at the node of ``outer``."""

    if outer.length > nvars:
        raise ValueError(f"{outer} has more than {nvars} parts")
    return eval_sym(F_poly(inner, nvars), EvalPoint.node(outer, nvars))


def diag_value(partition: Partition, nvars: int) -> LaurentV:
    """``(-1)^{binom(N,2)} q^{n(lambda) + binom(N,3)} prod (1 - q^{-h})``."""

    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")
    value = LaurentV.q(partition.n + comb(nvars, 3), -1 if comb(nvars, 2) % 2 else 1)
    for hook in partition.hooks:
        value = value * _one_minus_q(-hook)
    return value


def diag_checked(partition: Partition, nvars: int) -> LaurentV:
    value = diag_value(partition, nvars)
    direct = c_entry(partition, partition, nvars)
    if value != direct:
        raise IntegrityError(f"diagonal entry for {partition} at N={nvars}: {direct} != closed form {value}")
    return value


def d_entry_okounkov(inner: Partition, outer: Partition, nvars: int) -> RationalQ:
    """``(-1)^{|mu|-|lambda|} q^{c(lambda)-c(mu)} c*_{lambda,mu} / (c_{mu,mu} c*_{lambda,lambda})``."""

    if not outer.contains(inner):
        return RationalQ(0)
    sign = -1 if (outer.size - inner.size) % 2 else 1
    prefactor = LaurentV.q(inner.content_sum - outer.content_sum, sign)
    numerator = prefactor * c_entry(inner, outer, nvars).bar()
    denominator = diag_value(outer, nvars) * diag_value(inner, nvars).bar()
    return RationalQ(numerator, denominator)


@dataclass(frozen=True)
class TriangularMatrix:
    """Entries indexed by ``(inner, outer)`` pairs with ``inner`` contained in ``outer``."""

    nvars: int
    bound: Partition
    entries: Dict[Pair, object] = field(default_factory=dict)

    @property
    def partitions(self) -> List[Partition]:
        return [p for p in sub_partitions(self.bound) if p.length <= self.nvars]

    def get(self, inner: Partition, outer: Partition):
        return self.entries.get((inner, outer), self._zero())

    def _zero(self):
        raise NotImplementedError

    def items(self) -> List[Tuple[Pair, object]]:
        return sorted(self.entries.items(), key=lambda item: (item[0][0].sort_key, item[0][1].sort_key))

    def row(self, inner: Partition) -> Dict[Partition, object]:
        return {outer: value for (i, outer), value in self.items() if i == inner}


@dataclass(frozen=True)
class CMatrix(TriangularMatrix):
    def _zero(self) -> LaurentV:
        return LaurentV.zero()


@dataclass(frozen=True)
class DMatrix(TriangularMatrix):
    def _zero(self) -> RationalQ:
        return RationalQ(0)


def _pairs(bound: Partition, nvars: int) -> List[Pair]:
    ideal = [p for p in sub_partitions(bound) if p.length <= nvars]
    return [(inner, outer) for outer in ideal for inner in ideal if outer.contains(inner)]


def build_c_matrix(nvars: int, bound: Partition, workers: Optional[int] = None) -> CMatrix:
    pairs = _pairs(bound, nvars)
    prefetch({inner for inner, _ in pairs}, nvars, workers)
    entries = {(inner, outer): c_entry(inner, outer, nvars) for inner, outer in pairs}
    for partition in {outer for _, outer in pairs}:
        diag_checked(partition, nvars)
    return CMatrix(nvars, bound, entries)


def vanishing_check(nvars: int, bound: Partition) -> List[Pair]:
    """Return the pairs with ``outer`` not containing ``inner`` whose entry fails to vanish."""

    ideal = [p for p in sub_partitions(bound) if p.length <= nvars]
    failures = []
    for inner in ideal:
        for outer in ideal:
            if not outer.contains(inner) and not c_entry(inner, outer, nvars).is_zero:
                failures.append((inner, outer))
    return failures


def build_d_matrix(
    nvars: int, bound: Partition, route: str = "okounkov", workers: Optional[int] = None
) -> DMatrix:
    """Build ``D`` with the closed form (``okounkov``) or from Schur expansions (``hopf``)."""

    if route not in ("okounkov", "hopf"):
        raise ValueError(f"unknown route {route!r}")
    pairs = _pairs(bound, nvars)
    prefetch({p for pair in pairs for p in pair}, nvars, workers)
    if route == "okounkov":
        entries = {(inner, outer): d_entry_okounkov(inner, outer, nvars) for inner, outer in pairs}
    else:
        entries = {(inner, outer): d_entry_hopf(outer, inner, nvars) for inner, outer in pairs}
    return DMatrix(nvars, bound, entries)


def _product_entry(
    left: Callable[[Partition, Partition], object],
    right: Callable[[Partition, Partition], object],
    inner: Partition,
    outer: Partition,
    ideal: List[Partition],
) -> RationalQ:
    total = RationalQ(0)
    for middle in ideal:
        if middle.contains(inner) and outer.contains(middle):
            total = total + RationalQ.coerce(left(inner, middle)) * RationalQ.coerce(right(middle, outer))
    return total


def identity_check(c_matrix: CMatrix, d_matrix: DMatrix) -> List[str]:
    """Check ``C D = D C = 1`` on the bound ideal; return a list of failing entries."""

    ideal = c_matrix.partitions
    problems: List[str] = []
    for inner in ideal:
        for outer in ideal:
            if not outer.contains(inner):
                continue
            expected = RationalQ(1 if inner == outer else 0)
            if _product_entry(c_matrix.get, d_matrix.get, inner, outer, ideal) != expected:
                problems.append(f"(C.D)[{inner},{outer}]")
            if _product_entry(d_matrix.get, c_matrix.get, inner, outer, ideal) != expected:
                problems.append(f"(D.C)[{inner},{outer}]")
    return problems


def compare_routes(nvars: int, bound: Partition) -> List[Pair]:
    """Pairs on which the closed-form and Schur-expansion routes to ``D`` disagree."""

    closed = build_d_matrix(nvars, bound, "okounkov")
    expanded = build_d_matrix(nvars, bound, "hopf")
    return [pair for pair, value in closed.items() if expanded.entries[pair] != value]


def interpolate_sym(
    values: Mapping[Partition, LaurentV], bound: Partition, nvars: int
) -> Dict[Partition, RationalQ]:
    """Coefficients ``a_lambda`` with ``sum a_lambda F_lambda(node mu) = values[mu]`` on the bound ideal.

    Computed by applying ``D`` and by back-substitution through ``C``; both
    must agree.
    """

    ideal = [p for p in sub_partitions(bound) if p.length <= nvars]
    missing = [str(p) for p in ideal if p not in values]
    if missing:
        raise ValueError(f"missing node values for {', '.join(missing)}")
    nodes = {p: LaurentV.coerce(values[p]) for p in ideal}

    via_d: Dict[Partition, RationalQ] = {}
    for lam in ideal:
        total = RationalQ(0)
        for mu in ideal:
            if lam.contains(mu):
                total = total + d_entry_okounkov(mu, lam, nvars) * nodes[mu]
        via_d[lam] = total

    solved: Dict[Partition, RationalQ] = {}
    for mu in ideal:
        residual = RationalQ(nodes[mu])
        for lam, coefficient in solved.items():
            if mu.contains(lam) and lam != mu and not coefficient.is_zero:
                residual = residual - coefficient * c_entry(lam, mu, nvars)
        solved[mu] = residual / diag_value(mu, nvars)
    if solved != via_d:
        raise IntegrityError("interpolation by D disagrees with back-substitution")
    return via_d


def stable_c_entry(inner: Partition, outer: Partition, nvars: int) -> LaurentV:
    """``(-1)^{binom(N,2)} q^{-binom(N,3)} c_{lambda,mu}``, which does not depend on ``N``."""

    sign = -1 if comb(nvars, 2) % 2 else 1
    return c_entry(inner, outer, nvars) * LaurentV.q(-comb(nvars, 3), sign)


__all__ = [
    "CMatrix",
    "DMatrix",
    "build_c_matrix",
    "build_d_matrix",
    "c_entry",
    "compare_routes",
    "d_entry_okounkov",
    "diag_checked",
    "diag_value",
    "identity_check",
    "interpolate_sym",
    "prefetch",
    "stable_c_entry",
    "vanishing_check",
]
