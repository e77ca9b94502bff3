from __future__ import annotations

import json

import pytest

from qinterp.errors import MissingColor, TableValidationError
from qinterp.knotcyclo.tables import (
    builtin_table,
    check_table,
    figure_eight_jones,
    figure_eight_table,
    ingest_table,
    unknot_table,
    validate_figure_eight_oracle,
)
from qinterp.partitions import EMPTY, Partition
from qinterp.qring import LaurentV

ONE = {"var": "v", "coeffs": {"0": "1"}}
TWO = {"var": "v", "coeffs": {"0": "2"}}


def _payload(**overrides):
    payload = {"N": 2, "name": "sample", "normalization": "unknot=1", "values": {"[]": ONE, "[1]": TWO}}
    payload.update(overrides)
    return payload


def test_figure_eight_colored_jones():
    assert figure_eight_jones(0) == 1
    assert figure_eight_jones(1) == LaurentV.from_expr("1 + q**2 + q**-2 - q - q**-1")
    assert figure_eight_jones(2).bar() == figure_eight_jones(2)
    validate_figure_eight_oracle()
    with pytest.raises(ValueError):
        figure_eight_jones(-1)


def test_figure_eight_table_collapses_to_sl2():
    table = figure_eight_table(Partition.of(3, 3))

    assert table.nvars == 2
    assert table.collapse == "sl2"
    assert table.value(Partition.of(2, 2)) == 1
    assert table.value(Partition.of(3, 1)) == figure_eight_jones(2)
    with pytest.raises(MissingColor):
        table.value(Partition.of(4))


def test_unknot_and_builtin_lookup():
    table = unknot_table(3, 2)

    assert table.covers([EMPTY, Partition.of(1, 1), Partition.of(1, 1)])
    assert not table.covers([Partition.of(3)])
    assert builtin_table("unknot", 1).value(Partition.of(1)) == 1
    with pytest.raises(ValueError):
        builtin_table("trefoil", 1)
    with pytest.raises(ValueError):
        unknot_table(2, Partition.of(1, 1, 1))


def test_check_table_accepts_a_valid_payload():
    table = check_table(_payload(bound=[1]))

    assert table.provenance == "ingested"
    assert table.value(Partition.of(1)) == 2
    assert table.to_json()["values"]["[1]"] == TWO


def test_schema_errors_are_collected():
    payload = _payload()
    del payload["values"]

    with pytest.raises(TableValidationError) as excinfo:
        check_table(payload)
    assert excinfo.value.problems
    assert excinfo.value.to_dict()["error"] == "invalid_table"


@pytest.mark.parametrize(
    "values",
    [
        {"[]": TWO},
        {"[]": ONE, "[1,2]": ONE},
        {"[]": ONE, "[1,1,1]": ONE},
    ],
)
def test_bad_colors_are_rejected(values):
    with pytest.raises(TableValidationError):
        check_table(_payload(values=values))


def test_missing_color_under_bound():
    with pytest.raises(MissingColor) as excinfo:
        check_table(_payload(bound=[1, 1]))
    assert excinfo.value.to_dict()["error"] == "missing_color"


def test_sl2_collapse_is_enforced():
    values = {"[]": ONE, "[1]": TWO, "[1,1]": TWO}

    with pytest.raises(TableValidationError) as excinfo:
        check_table(_payload(values=values, collapse="sl2"))
    assert any("[1,1]" in problem for problem in excinfo.value.problems)


def test_ingest_from_file(tmp_path):
    path = tmp_path / "sample.json"
    path.write_text(json.dumps(_payload()), encoding="utf-8")

    assert ingest_table(path).name == "sample"

    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(TableValidationError):
        ingest_table(path)
