"""One-variable interpolation basis ``f_m(x) = (x;q)_m``."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, List, Mapping

from ..errors import IntegrityError
from ..qring import LaurentV, RationalQ, UniPoly, poch, qbinom, shifted_poch


@lru_cache(maxsize=None)
def f_uni(m: int) -> UniPoly:
    """``f_m(x) = (1-x)(1-qx)...(1-q^{m-1}x)``."""

    if m < 0:
        raise ValueError(f"f_m requires m >= 0, got {m}")
    if m == 0:
        return UniPoly.constant(1)
    return f_uni(m - 1) * UniPoly([1, -LaurentV.q(m - 1)])


def f_at_q_power(m: int, s: int) -> LaurentV:
    """``f_m(q^s)``."""

    return shifted_poch(s, m)


def f_norm(m: int) -> LaurentV:
    """``(f_m, f_m) = q^{-m} (q;q)_m``."""

    return poch(m).shift_q(-m)


def _finite_difference(m: int, values: Mapping[int, LaurentV]) -> LaurentV:
    total = LaurentV.zero()
    for j in range(m + 1):
        term = qbinom(m, j).shift_q(j * (j - 1) // 2) * values[j]
        total = total + (term if j % 2 == 0 else -term)
    return total


def newton_1d(values: Mapping[int, LaurentV]) -> List[RationalQ]:
    """Coefficients ``a_m`` with ``sum a_m f_m(q^{-k}) = values[k]`` for ``k = 0..M``.

    The closed formula is cross-checked against triangular back-substitution.
    """

    if not values:
        return []
    top = max(values)
    missing = [k for k in range(top + 1) if k not in values]
    if missing:
        raise ValueError(f"missing node values at q^-k for k in {missing}")
    nodes = {k: LaurentV.coerce(values[k]) for k in range(top + 1)}
    closed = [RationalQ(_finite_difference(m, nodes), f_norm(m)) for m in range(top + 1)]

    solved: List[RationalQ] = []
    for k in range(top + 1):
        residual = RationalQ(nodes[k])
        for m, coefficient in enumerate(solved):
            residual = residual - coefficient * f_at_q_power(m, -k)
        solved.append(residual / f_at_q_power(k, -k))
    if solved != closed:
        raise IntegrityError("Newton coefficients disagree with back-substitution")
    return closed


def newton_orthogonality_check(m: int, k: int) -> bool:
    """``(f_m, f_k)`` from node sums equals ``delta_{mk} q^{-m} (q;q)_m``."""

    # (g, x^b) = g(q^{-b}); expand f_k in monomials.
    pairing = LaurentV.zero()
    for b, coefficient in enumerate(f_uni(k).coeffs):
        pairing = pairing + coefficient * f_at_q_power(m, -b)
    expected = f_norm(m) if m == k else LaurentV.zero()
    return pairing == expected


def monomial_to_f(a: int) -> List[LaurentV]:
    """``k_{a,b} = (-1)^b q^{-ab + b(b+1)/2} [a choose b]_q`` so that ``x^a = sum_b k_{a,b} f_b(x)``."""

    if a < 0:
        raise ValueError(f"monomial degree must be nonnegative, got {a}")
    result = []
    for b in range(a + 1):
        value = qbinom(a, b).shift_q(-a * b + b * (b + 1) // 2)
        result.append(-value if b % 2 else value)
    return result


def from_f_coeffs(coefficients: List[LaurentV]) -> UniPoly:
    total = UniPoly()
    for m, coefficient in enumerate(coefficients):
        total = total + f_uni(m) * coefficient
    return total


def binomial_shift_expand(s: int, m: int) -> List[LaurentV]:
    """Coefficients of ``(x - q^s)(x - q^{s+1})...(x - q^{s+m-1})`` in the ``f_j`` basis."""

    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    result = []
    for j in range(m + 1):
        value = qbinom(m, j).shift_q(-j * m + comb(j + 1, 2)) * shifted_poch(s + j, m - j)
        result.append(-value if j % 2 else value)
    return result


def binomial_shift_product(s: int, m: int) -> UniPoly:
    product = UniPoly.constant(1)
    for i in range(m):
        product = product * UniPoly([-LaurentV.q(s + i), 1])
    return product


def check_f_uni(m: int) -> Dict[str, bool]:
    """Degree, leading coefficient, vanishing and q-binomial expansion of ``f_m``."""

    poly = f_uni(m)
    leading = LaurentV.q(m * (m - 1) // 2, -1 if m % 2 else 1)
    expansion = UniPoly(
        qbinom(m, j).shift_q(j * (j - 1) // 2).scale(-1 if j % 2 else 1) for j in range(m + 1)
    )
    return {
        "degree": poly.degree == m,
        "leading": poly.leading_coefficient() == leading,
        "vanishing": all(poly(LaurentV.q(-k)).is_zero for k in range(m)),
        "qbinomial": poly == expansion,
    }


__all__ = [
    "binomial_shift_expand",
    "binomial_shift_product",
    "check_f_uni",
    "f_at_q_power",
    "f_norm",
    "f_uni",
    "from_f_coeffs",
    "monomial_to_f",
    "newton_1d",
    "newton_orthogonality_check",
]
