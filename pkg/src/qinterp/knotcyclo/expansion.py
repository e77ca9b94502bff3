"""Cyclotomic coefficients ``a_lambda(K)`` of a colored knot invariant.

The invariant acts on ``V(mu)`` by ``J_K(V(mu))`` and ``sigma_lambda`` acts
by ``c_{lambda,mu}(q^{-1})``, so the coefficients solve a triangular system.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from ..errors import IntegrityError, NotDivisible, NotLaurent
from ..interp.matrices import DEFAULT_WORKERS, c_entry, d_entry_okounkov, diag_value, prefetch
from ..partitions import Partition
from ..qring import LaurentV, RationalQ, divide_exact
from .tables import Bound, KnotTable, _color_range

ROUTES = ("d-matrix", "substitution", "both")


def sigma_scalar(partition: Partition, target: Partition, nvars: int) -> LaurentV:
    """Scalar by which ``sigma_lambda`` acts on ``V(mu)``: ``c_{lambda,mu}(q^{-1})``."""

    if not target.contains(partition):
        return LaurentV.zero()
    if partition == target:
        return diag_value(partition, nvars).bar()
    return c_entry(partition, target, nvars).bar()


@dataclass(frozen=True)
class CycloCoeffs:
    """Laurent coefficients of ``J_K = sum a_lambda sigma_lambda``."""

    name: str
    nvars: int
    coeffs: Dict[Partition, LaurentV] = field(default_factory=dict)

    def get(self, partition: Partition) -> LaurentV:
        try:
            return self.coeffs[partition]
        except KeyError:
            raise KeyError(f"no coefficient computed for {partition}") from None

    @property
    def partitions(self) -> List[Partition]:
        return sorted(self.coeffs)

    def to_json(self) -> Dict[str, object]:
        return {
            "N": self.nvars,
            "knot": self.name,
            "coeffs": {p.key: self.coeffs[p].to_json() for p in self.partitions},
        }


def _laurent(value: RationalQ, partition: Partition) -> LaurentV:
    try:
        return value.to_laurent()
    except NotDivisible as exc:
        logging.error("a%s is not a Laurent polynomial: %s", partition, value)
        raise NotLaurent(f"a{partition} = {value} is not a Laurent polynomial", partition, exc.remainder) from exc


def coefficient_via_d(table: KnotTable, partition: Partition, ideal: List[Partition]) -> LaurentV:
    """``a_lambda = sum_{mu in lambda} d_{mu,lambda}(q^{-1}) J_K(V(mu))``."""

    total = RationalQ(0)
    for mu in ideal:
        if partition.contains(mu):
            value = table.value(mu)
            if not value.is_zero:
                total = total + d_entry_okounkov(mu, partition, table.nvars).bar() * value
    return _laurent(total, partition)


def coefficients_by_substitution(table: KnotTable, ideal: List[Partition]) -> Dict[Partition, LaurentV]:
    """Solve the triangular system from the smallest color up, skipping zero coefficients."""

    solved: Dict[Partition, LaurentV] = {}
    for mu in sorted(ideal):
        residual = table.value(mu)
        for lam, coefficient in solved.items():
            if lam != mu and not coefficient.is_zero and mu.contains(lam):
                residual = residual - coefficient * sigma_scalar(lam, mu, table.nvars)
        try:
            solved[mu] = divide_exact(residual, sigma_scalar(mu, mu, table.nvars))
        except NotDivisible as exc:
            raise NotLaurent(f"a{mu} is not a Laurent polynomial", mu, exc.remainder) from exc
    return solved


def a_coeffs(
    table: KnotTable, bound: Bound, route: str = "both", workers: Optional[int] = None
) -> CycloCoeffs:
    """Coefficients for every color under ``bound`` (a partition, or a maximal size)."""

    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; choose from {', '.join(ROUTES)}")
    ideal = _color_range(bound, table.nvars)
    table.require(ideal)

    by_substitution: Dict[Partition, LaurentV] = {}
    if route in ("substitution", "both"):
        by_substitution = coefficients_by_substitution(table, ideal)
        if route == "substitution":
            return CycloCoeffs(table.name, table.nvars, by_substitution)

    prefetch(ideal, table.nvars, workers)
    count = workers or DEFAULT_WORKERS
    logging.info("Expanding %s over %d colors at N=%d", table.name, len(ideal), table.nvars)
    with ThreadPoolExecutor(max_workers=max(count, 1)) as executor:
        values = list(executor.map(lambda p: coefficient_via_d(table, p, ideal), ideal))
    by_d = dict(zip(ideal, values))

    if route == "both" and by_d != by_substitution:
        differing = [str(p) for p in ideal if by_d[p] != by_substitution[p]]
        raise IntegrityError(f"D-matrix and substitution routes disagree at {', '.join(differing)}")
    return CycloCoeffs(table.name, table.nvars, by_d)


def reconstruct(coeffs: CycloCoeffs, target: Partition) -> LaurentV:
    """``sum_lambda a_lambda c_{lambda,mu}(q^{-1})``, the invariant on ``V(mu)``."""

    total = LaurentV.zero()
    for partition in coeffs.partitions:
        if target.contains(partition):
            total = total + coeffs.coeffs[partition] * sigma_scalar(partition, target, coeffs.nvars)
    return total


def round_trip_failures(table: KnotTable, coeffs: CycloCoeffs) -> List[Partition]:
    """Colors covered by ``coeffs`` whose reconstruction differs from the table."""

    return [mu for mu in coeffs.partitions if reconstruct(coeffs, mu) != table.value(mu)]


def coefficient_map(coeffs: CycloCoeffs) -> Mapping[str, str]:
    return {str(p): str(coeffs.coeffs[p]) for p in coeffs.partitions}


__all__ = [
    "CycloCoeffs",
    "ROUTES",
    "a_coeffs",
    "coefficient_map",
    "coefficient_via_d",
    "coefficients_by_substitution",
    "reconstruct",
    "round_trip_failures",
    "sigma_scalar",
]
