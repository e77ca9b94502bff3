"""Dense polynomials in an abstract variable ``x`` over ``Z[v, v^-1]``."""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple, Union

from .laurent import LaurentV, Scalar

Coefficient = Union[int, LaurentV]


class UniPoly:
    """Polynomial ``sum(coeffs[i] * x**i)`` with trailing zeros trimmed."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()) -> None:
        values = [LaurentV.coerce(c) for c in coeffs]
        while values and values[-1].is_zero:
            values.pop()
        self._coeffs: Tuple[LaurentV, ...] = tuple(values)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, value: Coefficient) -> "UniPoly":
        return cls([value])

    @property
    def coeffs(self) -> Tuple[LaurentV, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in ``x``; the zero polynomial has degree ``-1``."""

        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, index: int) -> LaurentV:
        if 0 <= index < len(self._coeffs):
            return self._coeffs[index]
        return LaurentV.zero()

    def leading_coefficient(self) -> LaurentV:
        if not self._coeffs:
            return LaurentV.zero()
        return self._coeffs[-1]

    def __call__(self, point: Scalar) -> LaurentV:
        value = LaurentV.zero()
        at = LaurentV.coerce(point)
        for coefficient in reversed(self._coeffs):
            value = value * at + coefficient
        return value

    def scale_variable(self, factor: Scalar) -> "UniPoly":
        """Return ``p(factor * x)``."""

        base = LaurentV.coerce(factor)
        power = LaurentV.one()
        values: List[LaurentV] = []
        for coefficient in self._coeffs:
            values.append(coefficient * power)
            power = power * base
        return UniPoly(values)

    def __add__(self, other: Union["UniPoly", Coefficient]) -> "UniPoly":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self._coeffs), len(rhs._coeffs))
        return UniPoly(self.coefficient(i) + rhs.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union["UniPoly", Coefficient]) -> "UniPoly":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Coefficient) -> "UniPoly":
        return UniPoly.constant(other) - self

    def __mul__(self, other: Union["UniPoly", Coefficient]) -> "UniPoly":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return UniPoly()
        values = [LaurentV.zero()] * (len(self._coeffs) + len(rhs._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(rhs._coeffs):
                values[i + j] = values[i + j] + a * b
        return UniPoly(values)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(map(str, self._coeffs))})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for index, coefficient in enumerate(self._coeffs):
            if coefficient.is_zero:
                continue
            monomial = "" if index == 0 else ("x" if index == 1 else f"x^{index}")
            pieces.append(f"({coefficient}){monomial}" if monomial else f"({coefficient})")
        return " + ".join(pieces)


def _coerce(value: object) -> "UniPoly | None":
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, LaurentV) or (isinstance(value, int) and not isinstance(value, bool)):
        return UniPoly.constant(value)
    return None


def product(factors: Sequence[UniPoly]) -> UniPoly:
    result = UniPoly.constant(1)
    for factor in factors:
        result = result * factor
    return result


__all__ = ["UniPoly", "product"]
