"""Sparse Laurent polynomials in ``v`` with arbitrary-precision integer coefficients.

The quantum parameter is ``q = v**2``; half-integer powers of ``q`` are odd
powers of ``v``. Values are immutable and hashable.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from sympy.polys.densearith import dup_div
from sympy.polys.domains import ZZ

from ..errors import NotDivisible
from ._dense import from_dense, to_dense

Scalar = Union[int, "LaurentV"]


class LaurentV:
    """Element of ``Z[v, v^-1]`` stored as ``{v-exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None) -> None:
        terms: Dict[int, int] = {}
        if coeffs:
            for exponent, coefficient in coeffs.items():
                value = int(coefficient)
                if value:
                    terms[int(exponent)] = value
        self._terms = terms
        self._hash: Optional[int] = None

    # -- constructors -------------------------------------------------

    @classmethod
    def _wrap(cls, terms: Dict[int, int]) -> "LaurentV":
        instance = cls.__new__(cls)
        instance._terms = terms
        instance._hash = None
        return instance

    @classmethod
    def zero(cls) -> "LaurentV":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "LaurentV":
        return cls._wrap({0: 1})

    @classmethod
    def constant(cls, value: int) -> "LaurentV":
        return cls({0: value})

    @classmethod
    def v(cls, exponent: int = 1, coefficient: int = 1) -> "LaurentV":
        """The monomial ``coefficient * v**exponent``."""

        return cls({exponent: coefficient})

    @classmethod
    def q(cls, exponent: int = 1, coefficient: int = 1) -> "LaurentV":
        """The monomial ``coefficient * q**exponent``."""

        return cls({2 * exponent: coefficient})

    @classmethod
    def from_q_coeffs(cls, coeffs: Mapping[int, int]) -> "LaurentV":
        return cls({2 * exponent: value for exponent, value in coeffs.items()})

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentV":
        if isinstance(value, LaurentV):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.constant(value)
        raise TypeError(f"cannot interpret {value!r} as a Laurent polynomial")

    @classmethod
    def from_expr(cls, text: str) -> "LaurentV":
        """Parse a sympy expression in ``q`` or ``v`` such as ``"q**-2*(q**3 - 1)"``."""

        from .rational import RationalQ

        return RationalQ.from_expr(text).to_laurent()

    # -- accessors ----------------------------------------------------

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def q_coefficient(self, exponent: int) -> int:
        return self._terms.get(2 * exponent, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_q_polynomial(self) -> bool:
        return all(exponent % 2 == 0 for exponent in self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._terms)

    def constant_value(self) -> int:
        if any(exponent != 0 for exponent in self._terms):
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, 0)

    def value_at_one(self) -> int:
        """Evaluate at ``v = 1``."""

        return sum(self._terms.values())

    def q_coeffs(self) -> Dict[int, int]:
        """Return ``{q-exponent: coefficient}``; requires a q-polynomial."""

        if not self.is_q_polynomial:
            raise ValueError(f"{self} has odd powers of v")
        return {exponent // 2: value for exponent, value in self._terms.items()}

    # -- transformations ----------------------------------------------

    def bar(self) -> "LaurentV":
        """Substitute ``v -> v^-1`` (equivalently ``q -> q^-1``)."""

        return LaurentV._wrap({-exponent: value for exponent, value in self._terms.items()})

    def shift(self, exponent: int) -> "LaurentV":
        """Multiply by ``v**exponent``."""

        if not exponent:
            return self
        return LaurentV._wrap({e + exponent: value for e, value in self._terms.items()})

    def shift_q(self, exponent: int) -> "LaurentV":
        return self.shift(2 * exponent)

    def subs_power(self, factor: int) -> "LaurentV":
        """Substitute ``v -> v**factor``."""

        if factor == 0:
            return LaurentV.constant(self.value_at_one())
        return LaurentV._wrap({e * factor: value for e, value in self._terms.items()})

    def scale(self, factor: int) -> "LaurentV":
        if not factor:
            return LaurentV.zero()
        return LaurentV._wrap({e: value * factor for e, value in self._terms.items()})

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentV":
        try:
            rhs = LaurentV.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for exponent, value in rhs._terms.items():
            total = terms.get(exponent, 0) + value
            if total:
                terms[exponent] = total
            else:
                terms.pop(exponent, None)
        return LaurentV._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentV":
        return LaurentV._wrap({e: -value for e, value in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentV":
        try:
            rhs = LaurentV.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> "LaurentV":
        return LaurentV.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentV":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, LaurentV):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentV.zero()
        terms: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = e1 + e2
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentV._wrap({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentV":
        if exponent < 0:
            if self.is_monomial and abs(next(iter(self._terms.values()))) == 1:
                (e, c), = self._terms.items()
                return LaurentV._wrap({-e * -exponent: c ** (-exponent)})
            raise ValueError(f"{self} is not a unit")
        result = LaurentV.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentV):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering ----------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentV({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponent in sorted(self._terms, reverse=True):
            pieces.append(_render_term(self._terms[exponent], exponent))
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> Dict[str, object]:
        return {
            "var": "v",
            "coeffs": {str(e): str(c) for e, c in sorted(self._terms.items())},
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "LaurentV":
        if payload.get("var") != "v":
            raise ValueError("Laurent payload must declare var 'v'")
        coeffs = payload.get("coeffs")
        if not isinstance(coeffs, Mapping):
            raise ValueError("Laurent payload must carry a coeffs mapping")
        return cls({int(e): int(c) for e, c in coeffs.items()})


def _render_term(coefficient: int, exponent: int) -> str:
    sign = "+ " if coefficient > 0 else "- "
    magnitude = abs(coefficient)
    if exponent == 0:
        return f"{sign}{magnitude}"
    if exponent % 2 == 0:
        power = exponent // 2
        symbol = "q"
    else:
        power = exponent
        symbol = "v"
    if power == 1:
        monomial = symbol
    elif 0 < power < 10:
        monomial = f"{symbol}^{power}"
    else:
        monomial = f"{symbol}^{{{power}}}"
    prefix = "" if magnitude == 1 else str(magnitude)
    return f"{sign}{prefix}{monomial}"


def divide_exact(numerator: Scalar, divisor: Scalar) -> LaurentV:
    """Return ``numerator / divisor`` when the quotient lies in ``Z[v, v^-1]``.

    Raises
    ------
    ZeroDivisionError
        If ``divisor`` is zero.
    NotDivisible
        If the division leaves a remainder; the remainder is attached.
    """

    p = LaurentV.coerce(numerator)
    d = LaurentV.coerce(divisor)
    if d.is_zero:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if p.is_zero:
        return LaurentV.zero()
    if d.is_monomial:
        (e, c), = d._terms.items()
        if all(value % c == 0 for value in p._terms.values()):
            return LaurentV._wrap({exp - e: value // c for exp, value in p._terms.items()})
    p_dense, p_shift = to_dense(p._terms)
    d_dense, d_shift = to_dense(d._terms)
    quotient, remainder = dup_div(p_dense, d_dense, ZZ)
    if remainder:
        rest = LaurentV(from_dense(remainder, p_shift))
        raise NotDivisible(f"{d} does not divide {p}", rest)
    return LaurentV(from_dense(quotient, p_shift - d_shift))


def divides(numerator: Scalar, divisor: Scalar) -> bool:
    try:
        divide_exact(numerator, divisor)
    except NotDivisible:
        return False
    return True


__all__ = ["LaurentV", "Scalar", "divide_exact", "divides"]
