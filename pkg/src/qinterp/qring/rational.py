"""Reduced fractions of Laurent polynomials.

Fractions are normalized so that equality is structural: numerator and
denominator share no nonconstant factor, and the denominator has minimal
exponent 0, positive leading coefficient and content 1. Coefficients stay in
the integers: a fraction whose denominator content does not divide the
numerator content is rejected.
"""

from __future__ import annotations

from typing import Dict, Mapping, Tuple, Union

import sympy
from sympy.polys.densetools import dup_content
from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_rr_prs_gcd
from sympy.polys.polyerrors import CoercionFailed

from ..errors import NotDivisible
from ._dense import from_dense, to_dense
from .laurent import LaurentV, divide_exact

Operand = Union[int, LaurentV, "RationalQ"]

_Q, _V = sympy.symbols("q v")


def _normalize(numerator: LaurentV, denominator: LaurentV) -> Tuple[LaurentV, LaurentV]:
    if denominator.is_zero:
        raise ZeroDivisionError("denominator is zero")
    if numerator.is_zero:
        return LaurentV.zero(), LaurentV.one()
    if denominator.is_monomial:
        (shift, coefficient), = denominator.coeffs.items()
        if coefficient in (1, -1):
            return numerator.shift(-shift).scale(coefficient), LaurentV.one()
    num_dense, num_shift = to_dense(numerator.coeffs)
    den_dense, den_shift = to_dense(denominator.coeffs)
    _, num_dense, den_dense = dup_rr_prs_gcd(num_dense, den_dense, ZZ)
    content = dup_content(den_dense, ZZ)
    if content != 1:
        num_content = dup_content(num_dense, ZZ)
        if num_content % content:
            raise ValueError(
                f"RationalQ needs integer content: denominator content {content} cannot be cleared from {numerator}/{denominator}"
            )
        num_dense = [c // content for c in num_dense]
        den_dense = [c // content for c in den_dense]
    if den_dense[0] < 0:
        num_dense = [-c for c in num_dense]
        den_dense = [-c for c in den_dense]
    num = LaurentV(from_dense(num_dense, num_shift - den_shift))
    den = LaurentV(from_dense(den_dense, 0))
    return num, den


class RationalQ:
    """A reduced fraction ``numerator / denominator`` over ``Z[v, v^-1]``.

    Interpolation matrix entries are rational in ``q``; the type keeps
    ``v`` as its variable so that q-only inputs stay q-only and mixed inputs
    (quantum dimensions at even ``N``) are still representable.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Union[int, LaurentV], denominator: Union[int, LaurentV] = 1) -> None:
        num, den = _normalize(LaurentV.coerce(numerator), LaurentV.coerce(denominator))
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalQ is immutable")

    @classmethod
    def coerce(cls, value: Operand) -> "RationalQ":
        if isinstance(value, RationalQ):
            return value
        return cls(LaurentV.coerce(value))

    @classmethod
    def from_expr(cls, text: str) -> "RationalQ":
        """Parse a sympy expression in ``q`` and ``v`` with integer coefficients."""

        try:
            expr = sympy.sympify(text, locals={"q": _Q, "v": _V})
        except (sympy.SympifyError, SyntaxError) as exc:
            raise ValueError(f"cannot parse {text!r}: {exc}") from exc
        expr = sympy.together(expr.subs(_Q, _V**2))
        num, den = sympy.fraction(expr)
        try:
            num_poly = sympy.Poly(sympy.expand(num), _V, domain="ZZ")
            den_poly = sympy.Poly(sympy.expand(den), _V, domain="ZZ")
        except (CoercionFailed, sympy.PolynomialError) as exc:
            raise ValueError(f"{text!r} is not a fraction of integer Laurent polynomials") from exc
        return cls(_poly_to_laurent(num_poly), _poly_to_laurent(den_poly))

    # -- predicates ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def is_laurent(self) -> bool:
        return self.denominator == 1

    @property
    def is_q_rational(self) -> bool:
        return self.numerator.is_q_polynomial and self.denominator.is_q_polynomial

    def to_laurent(self) -> LaurentV:
        """Return the value as a Laurent polynomial or raise :class:`NotDivisible`."""

        if self.is_laurent:
            return self.numerator
        return divide_exact(self.numerator, self.denominator)

    # -- arithmetic ---------------------------------------------------

    def bar(self) -> "RationalQ":
        """Substitute ``q -> q^-1``."""

        return RationalQ(self.numerator.bar(), self.denominator.bar())

    def __add__(self, other: Operand) -> "RationalQ":
        try:
            rhs = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if self.denominator == rhs.denominator:
            return RationalQ(self.numerator + rhs.numerator, self.denominator)
        return RationalQ(
            self.numerator * rhs.denominator + rhs.numerator * self.denominator,
            self.denominator * rhs.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalQ":
        return _raw(-self.numerator, self.denominator)

    def __sub__(self, other: Operand) -> "RationalQ":
        try:
            rhs = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Operand) -> "RationalQ":
        return RationalQ.coerce(other) - self

    def __mul__(self, other: Operand) -> "RationalQ":
        try:
            rhs = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalQ(self.numerator * rhs.numerator, self.denominator * rhs.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "RationalQ":
        try:
            rhs = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if rhs.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalQ(self.numerator * rhs.denominator, self.denominator * rhs.numerator)

    def __rtruediv__(self, other: Operand) -> "RationalQ":
        return RationalQ.coerce(other) / self

    def inverse(self) -> "RationalQ":
        return RationalQ(self.denominator, self.numerator)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentV)) and not isinstance(other, bool):
            other = RationalQ.coerce(other)
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"RationalQ({self})"

    def __str__(self) -> str:
        if self.is_laurent:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def to_json(self) -> Dict[str, object]:
        return {"num": self.numerator.to_json(), "den": self.denominator.to_json()}

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "RationalQ":
        return cls(LaurentV.from_json(payload["num"]), LaurentV.from_json(payload["den"]))


def _raw(numerator: LaurentV, denominator: LaurentV) -> RationalQ:
    instance = RationalQ.__new__(RationalQ)
    object.__setattr__(instance, "numerator", numerator)
    object.__setattr__(instance, "denominator", denominator)
    return instance


def _poly_to_laurent(poly: "sympy.Poly") -> LaurentV:
    return LaurentV({monom[0]: int(coeff) for monom, coeff in poly.terms()})


def to_laurent_or_raise(value: RationalQ, context: str) -> LaurentV:
    try:
        return value.to_laurent()
    except NotDivisible as exc:
        raise NotDivisible(f"{context}: {value} is not a Laurent polynomial", exc.remainder) from exc


__all__ = ["RationalQ", "to_laurent_or_raise"]
