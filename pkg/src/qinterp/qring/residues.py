"""Exact arithmetic in ``Z[q]/Phi_n(q)``, i.e. at a primitive ``n``-th root of unity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_zz_cyclotomic_poly

from .laurent import LaurentV


def _reduce(dense: List[object], order: int) -> Tuple[int, ...]:
    modulus = dup_zz_cyclotomic_poly(order, ZZ)
    width = len(modulus) - 1
    remainder = dup_rem(dense, modulus, ZZ) if dense else []
    ascending = [int(c) for c in reversed(remainder)]
    ascending.extend([0] * (width - len(ascending)))
    return tuple(ascending)


def _descending(coeffs: Tuple[int, ...]) -> List[object]:
    dense = [ZZ(c) for c in reversed(coeffs)]
    while dense and not dense[0]:
        dense.pop(0)
    return dense


@dataclass(frozen=True)
class CyclotomicResidue:
    """Residue ``sum(coeffs[i] * q**i)`` modulo ``Phi_order``; ``coeffs`` has length ``phi(order)``."""

    order: int
    coeffs: Tuple[int, ...]

    @classmethod
    def from_int(cls, value: int, order: int) -> "CyclotomicResidue":
        return eval_at_root(LaurentV.constant(value), order)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "CyclotomicResidue") -> None:
        if self.order != other.order:
            raise ValueError(f"residues at orders {self.order} and {other.order} cannot be combined")

    def __add__(self, other: "CyclotomicResidue") -> "CyclotomicResidue":
        self._check(other)
        return CyclotomicResidue(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicResidue":
        return CyclotomicResidue(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CyclotomicResidue") -> "CyclotomicResidue":
        return self + (-other)

    def __mul__(self, other: "CyclotomicResidue") -> "CyclotomicResidue":
        self._check(other)
        product = dup_mul(_descending(self.coeffs), _descending(other.coeffs), ZZ)
        return CyclotomicResidue(self.order, _reduce(product, self.order))

    def to_laurent(self) -> LaurentV:
        return LaurentV.from_q_coeffs({i: c for i, c in enumerate(self.coeffs)})

    def __str__(self) -> str:
        return f"{self.to_laurent()} mod Phi_{self.order}"

    def to_json(self) -> Dict[str, object]:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def eval_at_root(p: LaurentV, n: int) -> CyclotomicResidue:
    """Reduce the q-Laurent polynomial ``p`` modulo ``Phi_n``.

    Negative powers of ``q`` are folded with ``q^n = 1`` before reducing.
    """

    if n < 1:
        raise ValueError(f"root order must be positive, got {n}")
    if not p.is_q_polynomial:
        raise ValueError(f"{p} has odd powers of v; its value at a root of unity of q is not defined")
    folded = [0] * n
    for exponent, coefficient in p.q_coeffs().items():
        folded[exponent % n] += coefficient
    dense = [ZZ(c) for c in reversed(folded)]
    while dense and not dense[0]:
        dense.pop(0)
    return CyclotomicResidue(n, _reduce(dense, n))


__all__ = ["CyclotomicResidue", "eval_at_root"]
