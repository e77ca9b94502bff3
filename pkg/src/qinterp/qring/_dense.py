"""Bridges between sparse exponent maps and sympy's dense univariate lists."""

from __future__ import annotations

from typing import Dict, List, Mapping, Tuple

from sympy.polys.domains import ZZ

Dense = List[object]


def to_dense(terms: Mapping[int, int], step: int = 1) -> Tuple[Dense, int]:
    """Return ``(dup, shift)`` with ``terms == x^shift * dup`` in the variable ``v^step``.

    ``dup`` follows sympy's convention: coefficients from the highest degree
    down to the constant term. ``shift`` is the smallest exponent, in units of
    ``v``. Every exponent must be congruent to ``shift`` modulo ``step``.
    """

    if not terms:
        return [], 0
    low = min(terms)
    high = max(terms)
    if any((exponent - low) % step for exponent in terms):
        raise ValueError(f"exponents are not aligned to step {step}")
    degree = (high - low) // step
    dense: Dense = [ZZ(0)] * (degree + 1)
    for exponent, coefficient in terms.items():
        dense[degree - (exponent - low) // step] = ZZ(coefficient)
    return dense, low


def from_dense(dense: Dense, shift: int = 0, step: int = 1) -> Dict[int, int]:
    """Inverse of :func:`to_dense`."""

    terms: Dict[int, int] = {}
    degree = len(dense) - 1
    for index, coefficient in enumerate(dense):
        value = int(coefficient)
        if value:
            terms[shift + (degree - index) * step] = value
    return terms


__all__ = ["Dense", "from_dense", "to_dense"]
