"""Pydantic payload models for every JSON document the package reads or writes."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Literal, Mapping, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .habiro import HabiroElement, embed
from .interp.matrices import CMatrix, DMatrix, TriangularMatrix
from .knotcyclo.expansion import CycloCoeffs
from .knotcyclo.tables import KnotTable
from .partitions import Partition
from .qring import LaurentV, RationalQ
from .symfun import SymPoly


class LaurentPayload(BaseModel):
    """Sparse Laurent polynomial in ``v``; exponents and coefficients are strings."""

    model_config = ConfigDict(extra="forbid")

    var: Literal["v"] = "v"
    coeffs: Dict[str, str] = Field(default_factory=dict)

    @classmethod
    def from_value(cls, value: LaurentV) -> "LaurentPayload":
        return cls.model_validate(value.to_json())

    def to_value(self) -> LaurentV:
        return LaurentV.from_json(self.model_dump())


class RationalPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    num: LaurentPayload
    den: LaurentPayload

    @classmethod
    def from_value(cls, value: RationalQ) -> "RationalPayload":
        return cls.model_validate(value.to_json())

    def to_value(self) -> RationalQ:
        return RationalQ.from_json(self.model_dump())


class SymPolyPayload(BaseModel):
    """Coefficients in the monomial symmetric basis keyed by partition."""

    model_config = ConfigDict(extra="forbid")

    nvars: int = Field(ge=1)
    terms: Dict[str, LaurentPayload] = Field(default_factory=dict)

    @classmethod
    def from_value(cls, value: SymPoly) -> "SymPolyPayload":
        return cls.model_validate(value.to_json())

    def to_value(self) -> SymPoly:
        return SymPoly.from_json(self.model_dump())


class MatrixPayload(BaseModel):
    """Triangular matrix with ``"inner|outer"`` keys."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["C", "D"]
    N: int = Field(ge=1)
    bound: List[int]
    entries: Dict[str, Union[RationalPayload, LaurentPayload]]

    @classmethod
    def from_value(cls, matrix: TriangularMatrix) -> "MatrixPayload":
        kind = "C" if isinstance(matrix, CMatrix) else "D"
        entries: Dict[str, Union[RationalPayload, LaurentPayload]] = {}
        for (inner, outer), value in matrix.items():
            key = f"{inner.key}|{outer.key}"
            if isinstance(value, RationalQ):
                entries[key] = RationalPayload.from_value(value)
            else:
                entries[key] = LaurentPayload.from_value(value)
        return cls(kind=kind, N=matrix.nvars, bound=matrix.bound.to_json(), entries=entries)

    def to_value(self) -> TriangularMatrix:
        entries: Dict[Any, Any] = {}
        for key, payload in self.entries.items():
            inner_key, _, outer_key = key.partition("|")
            pair = (Partition.from_key(inner_key), Partition.from_key(outer_key))
            value = payload.to_value()
            if self.kind == "D" and isinstance(value, LaurentV):
                value = RationalQ(value)
            entries[pair] = value
        factory = CMatrix if self.kind == "C" else DMatrix
        return factory(self.N, Partition(tuple(self.bound)), entries)


class KnotTablePayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    N: int = Field(ge=1)
    name: str = "ingested"
    normalization: Literal["unknot=1"] = "unknot=1"
    provenance: Literal["builtin", "ingested"] = "ingested"
    bound: Optional[List[int]] = None
    collapse: Optional[Literal["sl2"]] = None
    values: Dict[str, LaurentPayload]

    @classmethod
    def from_value(cls, table: KnotTable) -> "KnotTablePayload":
        return cls.model_validate(table.to_json())


class CycloPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    N: int = Field(ge=1)
    knot: str
    coeffs: Dict[str, LaurentPayload]

    @classmethod
    def from_value(cls, coeffs: CycloCoeffs) -> "CycloPayload":
        return cls.model_validate(coeffs.to_json())

    def to_value(self) -> CycloCoeffs:
        values = {Partition.from_key(k): v.to_value() for k, v in self.coeffs.items()}
        return CycloCoeffs(self.knot, self.N, values)


class HabiroPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    trunc: int = Field(ge=1)
    rep: LaurentPayload

    @classmethod
    def from_value(cls, element: HabiroElement) -> "HabiroPayload":
        return cls.model_validate(element.to_json())

    def to_value(self) -> HabiroElement:
        return embed(self.rep.to_value(), self.trunc)


class ErrorPayload(BaseModel):
    """Machine-readable failure printed by the CLI on exit code 1."""

    model_config = ConfigDict(extra="allow")

    error: str
    message: str


def dump_json(payload: Union[BaseModel, Mapping[str, Any], List[Any]]) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json", exclude_none=True)
    return json.dumps(payload, indent=2, sort_keys=True)


__all__ = [
    "CycloPayload",
    "ErrorPayload",
    "HabiroPayload",
    "KnotTablePayload",
    "LaurentPayload",
    "MatrixPayload",
    "RationalPayload",
    "SymPolyPayload",
    "dump_json",
]
