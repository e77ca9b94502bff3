"""Symmetric polynomials over ``Z[v, v^-1]`` in the monomial-symmetric basis.

Keys of :class:`SymPoly` are weakly decreasing exponent vectors of length
``nvars`` (zeros allowed); the key ``alpha`` stands for the orbit sum
``m_alpha``. Schur polynomials come from the bialternant formula with an exact
sympy quotient by the Vandermonde determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

import sympy
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_permutations

from .errors import IntegrityError
from .partitions import Partition
from .qring import LaurentV, balanced_qnum, divide_exact

Exponents = Tuple[int, ...]
Coefficient = Union[int, LaurentV]


def _orbit(key: Exponents) -> Iterator[Exponents]:
    for arrangement in multiset_permutations(list(key)):
        yield tuple(arrangement)


@dataclass(frozen=True)
class EvalPoint:
    """The point ``(v^{e_1}, ..., v^{e_N})``."""

    v_exponents: Tuple[int, ...]

    @property
    def nvars(self) -> int:
        return len(self.v_exponents)

    @classmethod
    def from_q_exponents(cls, exponents: Sequence[int]) -> "EvalPoint":
        return cls(tuple(2 * e for e in exponents))

    @classmethod
    def staircase(cls, nvars: int) -> "EvalPoint":
        """``(q^{1-N}, ..., q^{-1}, 1)``."""

        return cls(tuple(2 * (i - nvars) for i in range(1, nvars + 1)))

    @classmethod
    def node(cls, partition: Partition, nvars: int) -> "EvalPoint":
        """Interpolation node ``q^{-mu_i - N + i}``."""

        return cls(tuple(-2 * p - 2 * nvars + 2 * i for i, p in enumerate(partition.padded(nvars), start=1)))

    @classmethod
    def rho_point(cls, partition: Partition, nvars: int) -> "EvalPoint":
        """``v^{2 mu_i + N + 1 - 2i}``, the point ``q^{mu + rho}``."""

        return cls(tuple(2 * p + nvars + 1 - 2 * i for i, p in enumerate(partition.padded(nvars), start=1)))


class SymPoly:
    """Symmetric polynomial ``sum(c_alpha * m_alpha)`` in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Coefficient] | None = None) -> None:
        if nvars < 0:
            raise ValueError(f"nvars must be nonnegative, got {nvars}")
        self.nvars = nvars
        cleaned: Dict[Exponents, LaurentV] = {}
        for key, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in key)
            if len(exponents) != nvars:
                raise ValueError(f"exponent key {key!r} does not have {nvars} entries")
            if any(a < b for a, b in zip(exponents, exponents[1:])) or any(e < 0 for e in exponents):
                raise ValueError(f"exponent key {key!r} is not weakly decreasing and nonnegative")
            value = LaurentV.coerce(coefficient)
            if not value.is_zero:
                cleaned[exponents] = cleaned.get(exponents, LaurentV.zero()) + value
        self._terms = {k: v for k, v in cleaned.items() if not v.is_zero}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SymPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Coefficient) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "SymPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, partition: Partition, nvars: int, coefficient: Coefficient = 1) -> "SymPoly":
        return cls(nvars, {partition.padded(nvars): coefficient})

    @classmethod
    def from_full_terms(
        cls, nvars: int, terms: Mapping[Exponents, Coefficient], check: bool = True
    ) -> "SymPoly":
        """Build from a dict over all exponent vectors of a symmetric polynomial.

        With ``check`` every orbit is verified to carry a constant coefficient.
        """

        reduced: Dict[Exponents, LaurentV] = {}
        for key, value in terms.items():
            if all(a >= b for a, b in zip(key, key[1:])):
                reduced[tuple(key)] = LaurentV.coerce(value)
        result = cls(nvars, reduced)
        if check:
            expanded = result.expand()
            given = {tuple(k): LaurentV.coerce(v) for k, v in terms.items() if not LaurentV.coerce(v).is_zero}
            if expanded != given:
                raise ValueError("polynomial is not symmetric")
        return result

    # -- accessors ----------------------------------------------------

    @property
    def terms(self) -> Dict[Exponents, LaurentV]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Exponents, LaurentV]]:
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def coefficient(self, key: Union[Exponents, Partition]) -> LaurentV:
        if isinstance(key, Partition):
            key = key.padded(self.nvars)
        return self._terms.get(tuple(key), LaurentV.zero())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(key) for key in self._terms)

    def homogeneous_part(self, degree: int) -> "SymPoly":
        return SymPoly(self.nvars, {k: v for k, v in self._terms.items() if sum(k) == degree})

    def top_degree_part(self) -> "SymPoly":
        return self.homogeneous_part(self.degree)

    def expand(self) -> Dict[Exponents, LaurentV]:
        """Return the coefficient of every monomial ``x^a``."""

        full: Dict[Exponents, LaurentV] = {}
        for key, value in self._terms.items():
            for arrangement in _orbit(key):
                full[arrangement] = value
        return full

    # -- arithmetic ---------------------------------------------------

    def _check_nvars(self, other: "SymPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._check_nvars(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, LaurentV.zero()) + value
        return SymPoly(self.nvars, terms)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Coefficient) -> "SymPoly":
        value = LaurentV.coerce(factor)
        return SymPoly(self.nvars, {k: c * value for k, c in self._terms.items()})

    def __mul__(self, other: Union["SymPoly", Coefficient]) -> "SymPoly":
        if isinstance(other, (int, LaurentV)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._check_nvars(other)
        if self.is_zero or other.is_zero:
            return SymPoly.zero(self.nvars)
        terms: Dict[Exponents, LaurentV] = {}
        left = self.expand()
        for key, value in other._terms.items():
            orbit = list(_orbit(key))
            for exponents, coefficient in left.items():
                product = coefficient * value
                for arrangement in orbit:
                    total = tuple(a + b for a, b in zip(exponents, arrangement))
                    if all(a >= b for a, b in zip(total, total[1:])):
                        terms[total] = terms.get(total, LaurentV.zero()) + product
        return SymPoly(self.nvars, terms)

    __rmul__ = __mul__

    def scale_variables(self, v_exponent: int) -> "SymPoly":
        """Return ``f(v^e x_1, ..., v^e x_N)``."""

        return SymPoly(self.nvars, {k: c.shift(v_exponent * sum(k)) for k, c in self._terms.items()})

    def restrict_last(self) -> "SymPoly":
        """Set ``x_N = 1``; the result is symmetric in the remaining variables."""

        if self.nvars == 0:
            raise ValueError("cannot restrict a polynomial in zero variables")
        terms: Dict[Exponents, LaurentV] = {}
        for key, value in self._terms.items():
            for index in sorted({key.index(e) for e in key}):
                rest = key[:index] + key[index + 1:]
                terms[rest] = terms.get(rest, LaurentV.zero()) + value
        return SymPoly(self.nvars - 1, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- evaluation ---------------------------------------------------

    def __call__(self, point: EvalPoint) -> LaurentV:
        return eval_sym(self, point)

    def __repr__(self) -> str:
        return f"SymPoly(nvars={self.nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({value})m{list(key)}" for key, value in self.items())

    def to_json(self) -> Dict[str, object]:
        return {
            "nvars": self.nvars,
            "terms": {Partition(key).key: value.to_json() for key, value in self.items()},
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "SymPoly":
        nvars = int(payload["nvars"])  # type: ignore[arg-type]
        terms = payload.get("terms") or {}
        return cls(
            nvars,
            {Partition.from_key(k).padded(nvars): LaurentV.from_json(v) for k, v in terms.items()},  # type: ignore[union-attr]
        )


def eval_sym(f: SymPoly, point: EvalPoint) -> LaurentV:
    """Evaluate ``f`` at ``point`` exactly."""

    if point.nvars != f.nvars:
        raise ValueError(f"point has {point.nvars} coordinates, polynomial has {f.nvars} variables")
    total: Dict[int, int] = {}
    for key, value in f.terms.items():
        orbit: Dict[int, int] = {}
        for arrangement in _orbit(key):
            exponent = sum(a * e for a, e in zip(arrangement, point.v_exponents))
            orbit[exponent] = orbit.get(exponent, 0) + 1
        for shift, multiplicity in orbit.items():
            for e, c in value.coeffs.items():
                total[e + shift] = total.get(e + shift, 0) + c * multiplicity
    return LaurentV(total)


# -- Schur polynomials ------------------------------------------------


def _gens(nvars: int) -> Tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"x1:{nvars + 1}")


def alternant(exponents: Sequence[int], nvars: int) -> sympy.Poly:
    """``det(x_j^{a_i})`` as an integer sympy polynomial."""

    gens = _gens(nvars)
    terms: Dict[Tuple[int, ...], int] = {}
    for arrangement in permutations(range(nvars)):
        monomial = [0] * nvars
        for row, column in enumerate(arrangement):
            monomial[column] = exponents[row]
        terms[tuple(monomial)] = terms.get(tuple(monomial), 0) + Permutation(list(arrangement)).signature()
    return sympy.Poly.from_dict(terms, *gens, domain="ZZ")


@lru_cache(maxsize=None)
def schur(partition: Partition, nvars: int) -> SymPoly:
    """Schur polynomial ``s_lambda(x_1..x_N)``; zero when ``lambda`` has more than ``N`` parts."""

    if partition.length > nvars:
        return SymPoly.zero(nvars)
    if nvars == 0:
        return SymPoly.one(0)
    numerator = alternant(partition.shifted(nvars), nvars)
    vandermonde = alternant(tuple(range(nvars - 1, -1, -1)), nvars)
    quotient = numerator.exquo(vandermonde)
    return SymPoly.from_full_terms(
        nvars, {monom: int(coeff) for monom, coeff in quotient.terms()}, check=False
    )


def to_sympy(f: SymPoly, v: sympy.Symbol) -> sympy.Expr:
    """Expand ``f`` into a sympy expression in ``x1..xN`` and ``v``."""

    gens = _gens(f.nvars)
    expression = sympy.Integer(0)
    for key, value in f.expand().items():
        monomial = sympy.Mul(*[g**e for g, e in zip(gens, key)])
        coefficient = sympy.Add(*[c * v**e for e, c in value.coeffs.items()])
        expression += coefficient * monomial
    return expression


def schur_expansion(f: SymPoly) -> Dict[Partition, LaurentV]:
    """Write ``f`` in the Schur basis by elimination against lex-leading monomials."""

    remainder = f
    coefficients: Dict[Partition, LaurentV] = {}
    while not remainder.is_zero:
        leading = max(remainder.terms)
        partition = Partition(leading)
        coefficient = remainder.coefficient(leading)
        coefficients[partition] = coefficient
        remainder = remainder - schur(partition, f.nvars).scale(coefficient)
    return dict(sorted(coefficients.items()))


def from_schur(coefficients: Mapping[Partition, Coefficient], nvars: int) -> SymPoly:
    result = SymPoly.zero(nvars)
    for partition, coefficient in coefficients.items():
        result = result + schur(partition, nvars).scale(coefficient)
    return result


# -- specializations --------------------------------------------------


def _one_minus_q(exponent: int) -> LaurentV:
    return LaurentV({0: 1, 2 * exponent: -1})


def schur_principal(partition: Partition, nvars: int) -> LaurentV:
    """``s_lambda(q^{1-N}, ..., 1)`` from the hook-content formula, checked by direct evaluation."""

    numerator = LaurentV.q(-partition.n)
    denominator = LaurentV.one()
    for cell in partition.cells:
        numerator = numerator * _one_minus_q(-nvars - cell.content)
        denominator = denominator * _one_minus_q(-cell.hook)
    closed = divide_exact(numerator, denominator)
    direct = eval_sym(schur(partition, nvars), EvalPoint.staircase(nvars))
    if closed != direct:
        raise IntegrityError(f"principal specialization of s{partition} disagrees: {closed} != {direct}")
    return closed


@lru_cache(maxsize=None)
def dimq(partition: Partition, nvars: int) -> LaurentV:
    """Quantum dimension ``prod [N + c] / [h]`` over the cells."""

    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")
    numerator = LaurentV.one()
    denominator = LaurentV.one()
    for cell in partition.cells:
        numerator = numerator * balanced_qnum(nvars + cell.content)
        denominator = denominator * balanced_qnum(cell.hook)
    return divide_exact(numerator, denominator)


@lru_cache(maxsize=None)
def hopf_schur(first: Partition, second: Partition, nvars: int) -> LaurentV:
    """``<V(lambda), V(mu)> = s_lambda(q^{mu + rho}) dim_q V(mu)``."""

    if first.length > nvars or second.length > nvars:
        raise ValueError(f"partitions must have at most {nvars} parts")
    return eval_sym(schur(first, nvars), EvalPoint.rho_point(second, nvars)) * dimq(second, nvars)


def hopf_form(f: SymPoly, g: SymPoly) -> LaurentV:
    """The form ``(f, s_mu) = f(q^{-mu_i-N+i}) s_mu(q^{1-N}, ..., 1)`` extended through the Schur expansion of ``g``."""

    if f.nvars != g.nvars:
        raise ValueError("polynomials live in different numbers of variables")
    total = LaurentV.zero()
    staircase = EvalPoint.staircase(f.nvars)
    for mu, b in schur_expansion(g).items():
        value = eval_sym(f, EvalPoint.node(mu, f.nvars))
        if value.is_zero:
            continue
        total = total + b * value * eval_sym(schur(mu, f.nvars), staircase)
    return total


def e_top(nvars: int) -> SymPoly:
    """``x_1 x_2 ... x_N``."""

    return SymPoly(nvars, {(1,) * nvars: 1})


def pieri_terms(partition: Partition, nvars: int) -> Iterable[Partition]:
    """Partitions obtained by adding one box, with at most ``nvars`` parts."""

    for index in range(min(partition.length + 1, nvars)):
        vector = [0] * (index + 1)
        vector[index] = 1
        grown = partition.plus(vector)
        if grown is not None:
            yield grown


__all__ = [
    "EvalPoint",
    "SymPoly",
    "alternant",
    "dimq",
    "e_top",
    "eval_sym",
    "from_schur",
    "hopf_form",
    "hopf_schur",
    "pieri_terms",
    "schur",
    "schur_expansion",
    "schur_principal",
    "to_sympy",
]
