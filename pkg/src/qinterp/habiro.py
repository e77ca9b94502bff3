"""Truncations ``Z[q]/((q;q)_T)`` of the Habiro ring."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Mapping, Sequence

from sympy.polys.densearith import dup_rem
from sympy.polys.domains import ZZ

from .qring import CyclotomicResidue, LaurentV, eval_at_root, poch
from .qring._dense import from_dense, to_dense

DEFAULT_TRUNCATION = int(os.getenv("QINTERP_TRUNCATION", "8"))


def _check_trunc(trunc: int) -> None:
    if trunc < 1:
        raise ValueError(f"truncation order must be at least 1, got {trunc}")


def _reduce(p: LaurentV, trunc: int) -> LaurentV:
    """Remainder of a q-polynomial with nonnegative exponents modulo ``(q;q)_T``."""

    if p.is_zero:
        return p
    dense, shift = to_dense(p.coeffs, step=2)
    if shift < 0:
        raise ValueError(f"{p} has negative powers of q")
    dense = dense + [ZZ(0)] * (shift // 2)
    modulus, _ = to_dense(poch(trunc).coeffs, step=2)
    return LaurentV(from_dense(dup_rem(dense, modulus, ZZ), 0, step=2))


@lru_cache(maxsize=None)
def q_inverse(trunc: int) -> LaurentV:
    """Representative of ``q^{-1} = sum_{n=0}^{T-1} q^n (q;q)_n`` modulo ``(q;q)_T``."""

    _check_trunc(trunc)
    total = LaurentV.zero()
    for n in range(trunc):
        total = total + poch(n).shift_q(n)
    return _reduce(total, trunc)


@dataclass(frozen=True)
class HabiroElement:
    """Canonical residue ``rep`` modulo ``(q;q)_trunc``."""

    trunc: int
    rep: LaurentV

    def _check(self, other: "HabiroElement") -> None:
        if self.trunc != other.trunc:
            raise ValueError(f"truncations {self.trunc} and {other.trunc} differ; truncate first")

    def __add__(self, other: "HabiroElement") -> "HabiroElement":
        self._check(other)
        return HabiroElement(self.trunc, _reduce(self.rep + other.rep, self.trunc))

    def __neg__(self) -> "HabiroElement":
        return HabiroElement(self.trunc, _reduce(-self.rep, self.trunc))

    def __sub__(self, other: "HabiroElement") -> "HabiroElement":
        return self + (-other)

    def __mul__(self, other: "HabiroElement") -> "HabiroElement":
        self._check(other)
        return HabiroElement(self.trunc, _reduce(self.rep * other.rep, self.trunc))

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def truncate(self, trunc: int) -> "HabiroElement":
        """Image under ``Z[q]/(q;q)_T -> Z[q]/(q;q)_{T'}`` for ``T' <= T``."""

        if trunc > self.trunc:
            raise ValueError(f"cannot lift from truncation {self.trunc} to {trunc}")
        return HabiroElement(trunc, _reduce(self.rep, trunc))

    def bar(self) -> "HabiroElement":
        """Apply ``q -> q^{-1}``, which preserves every ideal ``((q;q)_T)``."""

        return embed(self.rep.bar(), self.trunc)

    def __str__(self) -> str:
        return f"{self.rep} mod (q;q)_{self.trunc}"

    def to_json(self) -> Dict[str, object]:
        return {"trunc": self.trunc, "rep": self.rep.to_json()}

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "HabiroElement":
        trunc = int(payload["trunc"])  # type: ignore[arg-type]
        return embed(LaurentV.from_json(payload["rep"]), trunc)  # type: ignore[arg-type]


def embed(p: LaurentV, trunc: int = DEFAULT_TRUNCATION) -> HabiroElement:
    """Image of a q-Laurent polynomial; negative powers go through :func:`q_inverse`."""

    _check_trunc(trunc)
    if not p.is_q_polynomial:
        raise ValueError(f"{p} has odd powers of v and does not lie in Z[q, q^-1]")
    positive: Dict[int, int] = {}
    negative: Dict[int, int] = {}
    for exponent, coefficient in p.q_coeffs().items():
        (positive if exponent >= 0 else negative)[exponent] = coefficient
    total = _reduce(LaurentV.from_q_coeffs(positive), trunc)
    if negative:
        inverse = q_inverse(trunc)
        power = LaurentV.one()
        for k in range(1, -min(negative) + 1):
            power = _reduce(power * inverse, trunc)
            if -k in negative:
                total = total + power.scale(negative[-k])
    return HabiroElement(trunc, _reduce(total, trunc))


def from_series(terms: Sequence[LaurentV], trunc: int = DEFAULT_TRUNCATION) -> HabiroElement:
    """``sum_n terms[n] (q;q)_n``; terms with ``n >= T`` vanish in the truncation."""

    _check_trunc(trunc)
    total = HabiroElement(trunc, LaurentV.zero())
    for n, term in enumerate(terms):
        if term.is_zero:
            continue
        total = total + embed(LaurentV.coerce(term) * poch(n), trunc)
    return total


def eval_root(h: HabiroElement, order: int) -> CyclotomicResidue:
    """Value at a primitive root of unity of order ``n <= T``."""

    if not 1 <= order <= h.trunc:
        raise ValueError(f"root order {order} is not determined by truncation {h.trunc}")
    return eval_at_root(h.rep, order)


def taylor_at_1(h: HabiroElement, digits: int) -> List[int]:
    """Coefficients of ``(q - 1)^i`` for ``i = 0..digits``; requires ``digits <= T - 1``."""

    if not 0 <= digits <= h.trunc - 1:
        raise ValueError(f"{digits} Taylor digits are not determined by truncation {h.trunc}")
    coefficients = h.rep.q_coeffs()
    return [sum(c * comb(j, i) for j, c in coefficients.items()) for i in range(digits + 1)]


def laurent_membership(h: HabiroElement, candidate: LaurentV) -> bool:
    """Whether ``candidate`` represents ``h`` in this truncation."""

    try:
        return embed(candidate, h.trunc) == h
    except ValueError:
        return False


def one(trunc: int = DEFAULT_TRUNCATION) -> HabiroElement:
    return HabiroElement(trunc, _reduce(LaurentV.one(), trunc))


__all__ = [
    "DEFAULT_TRUNCATION",
    "HabiroElement",
    "embed",
    "eval_root",
    "from_series",
    "laurent_membership",
    "one",
    "q_inverse",
    "taylor_at_1",
]
