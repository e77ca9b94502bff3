"""q-Pochhammer symbols, Gaussian binomials, balanced quantum numbers and cyclotomic polynomials."""

from __future__ import annotations

from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_zz_cyclotomic_poly

from ._dense import from_dense
from .laurent import LaurentV


def _one_minus_q(exponent: int) -> LaurentV:
    """``1 - q**exponent``."""

    if exponent == 0:
        return LaurentV.zero()
    return LaurentV({0: 1, 2 * exponent: -1})


@lru_cache(maxsize=None)
def poch(m: int) -> LaurentV:
    """``(q;q)_m = (1-q)(1-q^2)...(1-q^m)``."""

    if m < 0:
        raise ValueError(f"poch requires m >= 0, got {m}")
    if m == 0:
        return LaurentV.one()
    return poch(m - 1) * _one_minus_q(m)


def shifted_poch(s: int, m: int) -> LaurentV:
    """``(q^s;q)_m = (1-q^s)(1-q^{s+1})...(1-q^{s+m-1})``."""

    if m < 0:
        raise ValueError(f"shifted_poch requires m >= 0, got {m}")
    result = LaurentV.one()
    for i in range(m):
        factor = _one_minus_q(s + i)
        if factor.is_zero:
            return factor
        result = result * factor
    return result


@lru_cache(maxsize=None)
def qbinom(a: int, b: int) -> LaurentV:
    """Gaussian binomial ``[a choose b]_q``; zero outside ``0 <= b <= a``."""

    if a < 0:
        raise ValueError(f"qbinom requires a >= 0, got {a}")
    if b < 0 or b > a:
        return LaurentV.zero()
    if b == 0 or b == a:
        return LaurentV.one()
    return qbinom(a - 1, b - 1) + qbinom(a - 1, b).shift_q(b)


def qfactorial(m: int) -> LaurentV:
    """``[m]_q! = (q;q)_m / (1-q)^m`` as a polynomial in ``q``."""

    result = LaurentV.one()
    for k in range(1, m + 1):
        result = result * LaurentV.from_q_coeffs({i: 1 for i in range(k)})
    return result


def curly(a: int) -> LaurentV:
    """``{a} = v^a - v^-a``."""

    if a == 0:
        return LaurentV.zero()
    return LaurentV({a: 1, -a: -1})


def curly_factorial(a: int) -> LaurentV:
    """``{a}! = {1}{2}...{a}``."""

    result = LaurentV.one()
    for k in range(1, a + 1):
        result = result * curly(k)
    return result


@lru_cache(maxsize=None)
def balanced_qnum(a: int) -> LaurentV:
    """``[a] = (v^a - v^-a)/(v - v^-1)``, defined for every integer ``a``."""

    if a < 0:
        return -balanced_qnum(-a)
    return LaurentV({a - 1 - 2 * i: 1 for i in range(a)})


def balanced_qfact(a: int) -> LaurentV:
    if a < 0:
        raise ValueError(f"balanced_qfact requires a >= 0, got {a}")
    result = LaurentV.one()
    for k in range(2, a + 1):
        result = result * balanced_qnum(k)
    return result


@lru_cache(maxsize=None)
def balanced_qbinom(a: int, b: int) -> LaurentV:
    """Balanced binomial ``[a]!/([b]![a-b]!)``; zero outside ``0 <= b <= a``."""

    if a < 0 or b < 0 or b > a:
        return LaurentV.zero()
    if b == 0 or b == a:
        return LaurentV.one()
    # [a,b] = v^{-b}[a-1,b] + v^{a-b}[a-1,b-1]
    return balanced_qbinom(a - 1, b).shift(-b) + balanced_qbinom(a - 1, b - 1).shift(a - b)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentV:
    """The cyclotomic polynomial ``Phi_n(q)``."""

    if n < 1:
        raise ValueError(f"cyclotomic requires n >= 1, got {n}")
    return LaurentV(from_dense(dup_zz_cyclotomic_poly(n, ZZ), 0, step=2))


__all__ = [
    "balanced_qbinom",
    "balanced_qfact",
    "balanced_qnum",
    "curly",
    "curly_factorial",
    "cyclotomic",
    "poch",
    "qbinom",
    "qfactorial",
    "shifted_poch",
]
