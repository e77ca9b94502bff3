"""Tables of colored knot invariants ``J_K(V(mu), q)`` indexed by partitions."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Union

from jsonschema import Draft202012Validator

from ..errors import IntegrityError, MissingColor, TableValidationError
from ..partitions import EMPTY, Partition, partitions_up_to, sub_partitions
from ..qring import LaurentV

DATA_DIR = Path(os.getenv("QINTERP_DATA", str(Path(__file__).resolve().parents[3] / "data")))
SCHEMA_PATH = DATA_DIR / "schema" / "knot_table.schema.json"

Bound = Union[Partition, int]


@dataclass(frozen=True)
class KnotTable:
    """Values of a knot invariant on ``V(mu)``, normalized so the unknot is 1."""

    name: str
    nvars: int
    values: Dict[Partition, LaurentV] = field(default_factory=dict)
    provenance: str = "builtin"
    collapse: Optional[str] = None

    @property
    def partitions(self) -> List[Partition]:
        return sorted(self.values)

    def value(self, partition: Partition) -> LaurentV:
        try:
            return self.values[partition]
        except KeyError:
            raise MissingColor(partition) from None

    def covers(self, partitions: Iterable[Partition]) -> bool:
        return all(p in self.values for p in partitions)

    def require(self, partitions: Iterable[Partition]) -> None:
        for partition in partitions:
            if partition not in self.values:
                raise MissingColor(partition)

    def to_json(self) -> Dict[str, object]:
        payload: Dict[str, object] = {
            "N": self.nvars,
            "name": self.name,
            "normalization": "unknot=1",
            "provenance": self.provenance,
            "values": {p.key: self.values[p].to_json() for p in self.partitions},
        }
        if self.collapse:
            payload["collapse"] = self.collapse
        return payload


def _color_range(bound: Bound, nvars: int) -> List[Partition]:
    if isinstance(bound, Partition):
        if bound.length > nvars:
            raise ValueError(f"bound {bound} has more than {nvars} parts")
        return sub_partitions(bound)
    return partitions_up_to(bound, nvars)


def from_sl2(name: str, colored_jones: Callable[[int], LaurentV], bound: Bound) -> KnotTable:
    """gl2 table from sl2 values: ``J_K(V(l1, l2)) = J_K(V_{l1 - l2})``."""

    values = {p: colored_jones(p.part(0) - p.part(1)) for p in _color_range(bound, 2)}
    return KnotTable(name, 2, values, "builtin", "sl2")


@lru_cache(maxsize=None)
def figure_eight_jones(n: int) -> LaurentV:
    """``J(V_n) = sum_m prod_{j=1}^m (q^{n+1} + q^{-n-1} - q^j - q^{-j})``."""

    if n < 0:
        raise ValueError(f"color must be nonnegative, got {n}")
    top = LaurentV.q(n + 1) + LaurentV.q(-n - 1)
    total = LaurentV.one()
    term = LaurentV.one()
    for j in range(1, n + 1):
        term = term * (top - LaurentV.q(j) - LaurentV.q(-j))
        total = total + term
    return total


FIGURE_EIGHT_PRINTED = {
    0: "1",
    1: "1 + q**2 + q**-2 - q - q**-1",
    2: "1 + q**3 + q**-3 - q - q**-1 + (q**3 + q**-3 - q - q**-1)*(q**3 + q**-3 - q**2 - q**-2)",
}


def validate_figure_eight_oracle() -> None:
    for n, text in FIGURE_EIGHT_PRINTED.items():
        if figure_eight_jones(n) != LaurentV.from_expr(text):
            raise IntegrityError(f"figure-eight oracle disagrees with the printed value of V_{n}")


def figure_eight_table(bound: Bound) -> KnotTable:
    """The figure-eight knot at ``N = 2`` on every color under ``bound``."""

    validate_figure_eight_oracle()
    return from_sl2("fig8", figure_eight_jones, bound)


def unknot_table(nvars: int, bound: Bound) -> KnotTable:
    return KnotTable("unknot", nvars, {p: LaurentV.one() for p in _color_range(bound, nvars)})


BUILTIN_KNOTS = {"fig8": figure_eight_table, "unknot": lambda bound: unknot_table(2, bound)}


def builtin_table(name: str, bound: Bound) -> KnotTable:
    try:
        factory = BUILTIN_KNOTS[name]
    except KeyError:
        raise ValueError(f"unknown knot {name!r}; choose from {', '.join(sorted(BUILTIN_KNOTS))}") from None
    return factory(bound)


def create_validator(schema_path: Path = SCHEMA_PATH) -> Draft202012Validator:
    with schema_path.open("r", encoding="utf-8") as handle:
        return Draft202012Validator(json.load(handle))


def check_table(payload: Mapping[str, object], validator: Optional[Draft202012Validator] = None) -> KnotTable:
    """Validate a decoded table payload and build the :class:`KnotTable`."""

    validator = validator or create_validator()
    problems = [
        f"{'/'.join(str(p) for p in error.absolute_path) or '<root>'}: {error.message}"
        for error in sorted(validator.iter_errors(payload), key=lambda e: list(map(str, e.absolute_path)))
    ]
    if problems:
        raise TableValidationError("knot table does not match the schema", problems)

    nvars = int(payload["N"])  # type: ignore[arg-type]
    values: Dict[Partition, LaurentV] = {}
    for key, raw in payload["values"].items():  # type: ignore[union-attr]
        try:
            partition = Partition.from_key(key)
        except ValueError as exc:
            problems.append(f"values/{key}: {exc}")
            continue
        if partition.length > nvars:
            problems.append(f"values/{key}: more than {nvars} parts")
            continue
        values[partition] = LaurentV.from_json(raw)
    if problems:
        raise TableValidationError("knot table has malformed colors", problems)

    if values.get(EMPTY) != LaurentV.one():
        raise TableValidationError("knot table is not normalized", [f"value at {EMPTY} must be 1"])

    bound = payload.get("bound")
    if bound is not None:
        for partition in sub_partitions(Partition(tuple(bound))):  # type: ignore[arg-type]
            if partition not in values:
                raise MissingColor(partition)

    collapse = payload.get("collapse")
    if collapse == "sl2":
        if nvars != 2:
            raise TableValidationError("sl2 collapse is declared for a table with N != 2", [f"N={nvars}"])
        seen: Dict[int, LaurentV] = {}
        for partition, value in sorted(values.items()):
            width = partition.part(0) - partition.part(1)
            if seen.setdefault(width, value) != value:
                problems.append(f"values/{partition.key}: differs from the value at width {width}")
        if problems:
            raise TableValidationError("knot table violates the sl2 collapse rule", problems)

    name = str(payload.get("name", "ingested"))
    return KnotTable(name, nvars, values, "ingested", collapse)  # type: ignore[arg-type]


def ingest_table(path: Path, validator: Optional[Draft202012Validator] = None) -> KnotTable:
    try:
        with Path(path).open("r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except json.JSONDecodeError as exc:
        raise TableValidationError(f"{path}: invalid JSON", [f"line {exc.lineno} column {exc.colno}: {exc.msg}"]) from exc
    if not isinstance(payload, dict):
        raise TableValidationError(f"{path}: expected a JSON object")
    table = check_table(payload, validator)
    logging.info("Ingested %d colors for %s from %s", len(table.values), table.name, path)
    return table


__all__ = [
    "BUILTIN_KNOTS",
    "KnotTable",
    "builtin_table",
    "check_table",
    "create_validator",
    "figure_eight_jones",
    "figure_eight_table",
    "from_sl2",
    "ingest_table",
    "unknot_table",
    "validate_figure_eight_oracle",
]
