"""Divisibility of values ``F_lambda(q^{a_1}, ..., q^{a_N})`` by q-Pochhammer symbols."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import List, Sequence

from ..errors import NotDivisible
from ..partitions import Partition, partitions_up_to
from ..qring import LaurentV, divide_exact, poch
from ..symfun import EvalPoint, eval_sym
from .fpoly import F_poly


@dataclass(frozen=True)
class Certificate:
    partition: Partition
    point: tuple
    k: int
    value: LaurentV
    quotient: LaurentV

    def verify(self) -> bool:
        return self.quotient * poch(self.k) == self.value


def _certify(partition: Partition, point: Sequence[int], nvars: int, k: int) -> Certificate:
    if len(point) != nvars:
        raise ValueError(f"point {tuple(point)} does not have {nvars} coordinates")
    value = eval_sym(F_poly(partition, nvars), EvalPoint.from_q_exponents(point))
    try:
        quotient = divide_exact(value, poch(k))
    except NotDivisible as exc:
        logging.error("F%s(q^%s) is not divisible by (q;q)_%d", partition, tuple(point), k)
        raise NotDivisible(
            f"F{partition} at q^{tuple(point)} is not divisible by (q;q)_{k}", exc.remainder
        ) from exc
    return Certificate(partition, tuple(point), k, value, quotient)


def divisibility_certificate(partition: Partition, point: Sequence[int], nvars: int) -> Certificate:
    """Divide ``F_lambda(q^a)`` by ``(q;q)_k`` with ``k = floor(|lambda| / binom(N+1, 2))``."""

    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")
    return _certify(partition, point, nvars, partition.size // comb(nvars + 1, 2))


def one_row_certificate(n: int, a: int, b: int) -> Certificate:
    """At ``N = 2`` the one-row value ``F_{(n)}(q^a, q^b)`` is divisible by ``(q;q)_{floor(n/2)}``."""

    return _certify(Partition.of(n), (a, b), 2, n // 2)


def divisibility_sweep(max_size: int, nvars: int, low: int, high: int) -> List[Certificate]:
    """Certify every partition of size ``<= max_size`` on the grid ``[low, high]^N``."""

    certificates = []
    grid = range(low, high + 1)
    for partition in partitions_up_to(max_size, nvars):
        for point in product(grid, repeat=nvars):
            certificates.append(divisibility_certificate(partition, point, nvars))
    return certificates


__all__ = [
    "Certificate",
    "divisibility_certificate",
    "divisibility_sweep",
    "one_row_certificate",
]
