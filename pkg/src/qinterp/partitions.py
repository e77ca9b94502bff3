"""Partitions, Young-diagram statistics and enumeration."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, total_ordering
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from sympy.utilities.iterables import partitions as _sympy_partitions

from .errors import IntegrityError
from .qring import LaurentV, divide_exact, poch


@dataclass(frozen=True)
class Cell:
    """A box of a Young diagram with its arm, leg, co-arm and co-leg."""

    row: int
    col: int
    arm: int
    leg: int
    coarm: int
    coleg: int

    @property
    def hook(self) -> int:
        return self.arm + self.leg + 1

    @property
    def content(self) -> int:
        return self.coarm - self.coleg


@total_ordering
@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Ordering is by size, then by reverse lexicographic order of the parts, so
    ``(2)`` precedes ``(1,1)``. The order refines containment.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: Union[str, Sequence[int], "Partition"]) -> "Partition":
        """Accept ``"3,2"``, ``"[3,2]"``, ``"0"``, ``""`` or an integer sequence."""

        if isinstance(text, Partition):
            return text
        if not isinstance(text, str):
            return cls(tuple(text))
        stripped = text.strip().strip("[]()").strip()
        if not stripped:
            return cls()
        try:
            values = tuple(int(piece) for piece in stripped.split(",") if piece.strip())
        except ValueError as exc:
            raise ValueError(f"invalid partition {text!r}") from exc
        return cls(values)

    # -- basic data ---------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, index: int) -> int:
        """Zero-based part access with implicit trailing zeros."""

        return self.parts[index] if index < len(self.parts) else 0

    def padded(self, nvars: int) -> Tuple[int, ...]:
        if self.length > nvars:
            raise ValueError(f"{self} has more than {nvars} parts")
        return self.parts + (0,) * (nvars - self.length)

    @cached_property
    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.size, tuple(-p for p in self.parts)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key < other.sort_key

    # -- diagram statistics -------------------------------------------

    @cached_property
    def cells(self) -> Tuple[Cell, ...]:
        conjugate = self.transpose.parts
        result: List[Cell] = []
        for i, row in enumerate(self.parts):
            for j in range(row):
                result.append(
                    Cell(row=i, col=j, arm=row - j - 1, leg=conjugate[j] - i - 1, coarm=j, coleg=i)
                )
        return tuple(result)

    @property
    def hooks(self) -> List[int]:
        return [cell.hook for cell in self.cells]

    @property
    def contents(self) -> List[int]:
        return [cell.content for cell in self.cells]

    @property
    def n(self) -> int:
        """``n(lambda) = sum (i-1) lambda_i``."""

        return sum(i * p for i, p in enumerate(self.parts))

    @property
    def n_conjugate(self) -> int:
        return sum(p * (p - 1) // 2 for p in self.parts)

    @property
    def content_sum(self) -> int:
        return self.n_conjugate - self.n

    def stats(self) -> Tuple[int, int, int]:
        return self.n, self.n_conjugate, self.content_sum

    def shifted(self, nvars: int) -> Tuple[int, ...]:
        """``lambda_i + N - i`` for ``i = 1..N``."""

        return tuple(p + nvars - 1 - i for i, p in enumerate(self.padded(nvars)))

    # -- relations ----------------------------------------------------

    def contains(self, other: "Partition") -> bool:
        """Whether ``other`` fits inside this diagram."""

        if other.length > self.length:
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def add_column(self, height: int, width: int = 1) -> "Partition":
        """Add ``width`` full columns of the given height (the partition must fit)."""

        if self.length > height:
            raise ValueError(f"{self} has more than {height} parts")
        return Partition(tuple(p + width for p in self.padded(height)))

    def plus(self, vector: Sequence[int]) -> Optional["Partition"]:
        """Add an exponent vector; ``None`` when the result is not a partition."""

        values = [self.part(i) + int(v) for i, v in enumerate(vector)]
        values.extend(self.parts[len(values):])
        if any(a < b for a, b in zip(values, values[1:])) or any(v < 0 for v in values):
            return None
        return Partition(tuple(values))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts or (0,))) + ")"

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"

    def to_json(self) -> List[int]:
        return list(self.parts)

    @property
    def key(self) -> str:
        """String form used for JSON object keys, e.g. ``"[3,2]"``."""

        return json.dumps(list(self.parts), separators=(",", ":"))

    @classmethod
    def from_key(cls, key: str) -> "Partition":
        value = json.loads(key)
        if not isinstance(value, list):
            raise ValueError(f"partition key must be a JSON array, got {key!r}")
        return cls(tuple(value))


EMPTY = Partition()


def D_N(partition: Partition, nvars: int) -> int:
    """``sum_i binom(lambda_i + N - i, 2)``, checked against ``c + (N-1)|lambda| + binom(N,3)``."""

    if partition.length > nvars:
        raise ValueError(f"{partition} has more than {nvars} parts")
    direct = sum(comb(value, 2) for value in partition.shifted(nvars))
    closed = partition.content_sum + (nvars - 1) * partition.size + comb(nvars, 3)
    if direct != closed:
        raise IntegrityError(f"D_N({partition}, {nvars}) disagrees: {direct} != {closed}")
    return direct


def sub_partitions(bound: Partition) -> List[Partition]:
    """All partitions contained in ``bound``, in the module's total order."""

    found: List[Partition] = []

    def extend(prefix: List[int], index: int) -> None:
        found.append(Partition(tuple(prefix)))
        if index >= bound.length:
            return
        ceiling = bound.parts[index]
        if prefix:
            ceiling = min(ceiling, prefix[-1])
        for value in range(1, ceiling + 1):
            extend(prefix + [value], index + 1)

    extend([], 0)
    return sorted(found)


def partitions_of(size: int, max_length: Optional[int] = None) -> List[Partition]:
    """Partitions of ``size`` with at most ``max_length`` parts, in the module's order."""

    if size < 0:
        return []
    if size == 0:
        return [EMPTY]
    result: List[Partition] = []
    for multiplicities in _sympy_partitions(size, m=max_length):
        parts: List[int] = []
        for value, count in dict(multiplicities).items():
            parts.extend([value] * count)
        result.append(Partition(tuple(sorted(parts, reverse=True))))
    return sorted(result)


def partitions_up_to(size: int, max_length: int) -> List[Partition]:
    """Partitions of size ``<= size`` with at most ``max_length`` parts."""

    result: List[Partition] = []
    for k in range(size + 1):
        result.extend(partitions_of(k, max_length))
    return result


def all_partitions(bound: Union[Partition, int], max_length: Optional[int] = None) -> List[Partition]:
    """Enumerate by containment bound (a partition) or by exact size (an integer)."""

    if isinstance(bound, Partition):
        found = sub_partitions(bound)
        if max_length is not None:
            found = [p for p in found if p.length <= max_length]
        return found
    return partitions_of(bound, max_length)


def hook_product_identity_check(partition: Partition, nvars: int) -> bool:
    """Compare both sides of the hook-product identity as polynomials in ``q``."""

    left = LaurentV.one()
    for hook in partition.hooks:
        left = left * LaurentV({0: 1, 2 * hook: -1})
    shifted = partition.shifted(nvars)
    numerator = LaurentV.one()
    for value in shifted:
        numerator = numerator * poch(value)
    denominator = LaurentV.one()
    for i, a in enumerate(shifted):
        for b in shifted[i + 1:]:
            denominator = denominator * LaurentV({0: 1, 2 * (a - b): -1})
    return divide_exact(numerator, denominator) == left


__all__ = [
    "Cell",
    "D_N",
    "EMPTY",
    "Partition",
    "all_partitions",
    "hook_product_identity_check",
    "partitions_of",
    "partitions_up_to",
    "sub_partitions",
]
