from __future__ import annotations

import json

import pytest
from pydantic import ValidationError

from qinterp.habiro import embed
from qinterp.interp import F_poly, build_d_matrix
from qinterp.knotcyclo import a_coeffs, figure_eight_table
from qinterp.partitions import Partition
from qinterp.qring import LaurentV, RationalQ
from qinterp.serialization import (
    CycloPayload,
    ErrorPayload,
    HabiroPayload,
    KnotTablePayload,
    LaurentPayload,
    MatrixPayload,
    RationalPayload,
    SymPolyPayload,
    dump_json,
)


def test_laurent_payload_forbids_extra_fields():
    payload = LaurentPayload.from_value(LaurentV.from_expr("q - 1"))

    assert payload.coeffs == {"0": "-1", "2": "1"}
    with pytest.raises(ValidationError):
        LaurentPayload.model_validate({"var": "v", "coeffs": {}, "degree": 3})
    with pytest.raises(ValidationError):
        LaurentPayload.model_validate({"var": "q", "coeffs": {}})


def test_rational_payload():
    value = RationalQ.from_expr("-q/(1 - q)")

    assert RationalPayload.from_value(value).to_value() == value


def test_symmetric_polynomial_payload():
    poly = F_poly(Partition.of(2, 1), 2)
    payload = SymPolyPayload.from_value(poly)

    assert payload.nvars == 2
    assert payload.to_value() == poly
    with pytest.raises(ValidationError):
        SymPolyPayload.model_validate({"nvars": 0, "terms": {}})


def test_d_matrix_payload_restores_rational_entries():
    matrix = build_d_matrix(2, Partition.of(1, 1), workers=1)
    payload = MatrixPayload.from_value(matrix)
    restored = MatrixPayload.model_validate_json(payload.model_dump_json()).to_value()

    assert payload.kind == "D"
    assert payload.bound == [1, 1]
    assert restored.entries == matrix.entries
    assert isinstance(restored.get(Partition.of(), Partition.of()), RationalQ)


def test_knot_and_coefficient_payloads():
    table = figure_eight_table(Partition.of(1))
    coeffs = a_coeffs(table, Partition.of(1), route="substitution")

    assert KnotTablePayload.from_value(table).collapse == "sl2"
    assert CycloPayload.from_value(coeffs).to_value().coeffs == coeffs.coeffs


def test_habiro_payload_reduces_on_load():
    payload = HabiroPayload.model_validate({"trunc": 1, "rep": {"var": "v", "coeffs": {"4": "1"}}})

    assert payload.to_value() == embed(LaurentV.one(), 1)
    with pytest.raises(ValidationError):
        HabiroPayload.model_validate({"trunc": 0, "rep": {"var": "v", "coeffs": {}}})


def test_error_payload_and_dump():
    payload = ErrorPayload.model_validate({"error": "insufficient_bound", "message": "short", "truncation": 2})
    text = dump_json(payload)

    assert json.loads(text) == {"error": "insufficient_bound", "message": "short", "truncation": 2}
    assert dump_json({"b": 1, "a": 2}).index('"a"') < dump_json({"b": 1, "a": 2}).index('"b"')
