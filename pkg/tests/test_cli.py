from __future__ import annotations

import json

import pytest

from qinterp.cli import build_parser, main
from qinterp.knotcyclo import unknot_table


def test_fpoly_text_and_json(capsys):
    assert main(["fpoly", "--lambda", "2,1"]) == 0
    text = capsys.readouterr().out

    assert text.startswith("F_{2,1} = (q^3) s_{2,1}")
    assert "(-q^3) s_{2}" in text

    assert main(["fpoly", "--lambda", "2,1", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schur"]["[2,1]"] == {"var": "v", "coeffs": {"6": "1"}}
    assert payload["N"] == 2


def test_tables_use_the_cache(tmp_path, capsys):
    assert main(["tables", "--bound", "1,1", "--format", "json", "--cache-dir", str(tmp_path)]) == 0
    payload = json.loads(capsys.readouterr().out)

    assert payload["C"]["entries"]["[]|[]"] == {"var": "v", "coeffs": {"0": "-1"}}
    assert payload["D"]["kind"] == "D"
    assert sorted(path.name for path in tmp_path.iterdir()) == ["C-N2-1-1-v1.json", "D-N2-1-1-v1.json"]


def test_tables_text_without_cache(tmp_path, capsys):
    assert main(["tables", "--bound", "1", "--no-cache", "--cache-dir", str(tmp_path)]) == 0
    output = capsys.readouterr().out

    assert "C matrix, N=2" in output
    assert "D matrix, N=2" in output
    assert list(tmp_path.iterdir()) == []


def test_expand_knot_json(capsys):
    assert main(["expand-knot", "--knot", "unknot", "--bound", "1", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)

    assert payload["knot"] == "unknot"
    assert payload["coeffs"]["[]"] == {"var": "v", "coeffs": {"0": "-1"}}


def test_unified_unknot(capsys):
    assert main(["unified", "--knot", "unknot", "--sign", "-", "--trunc", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)

    assert payload == {"trunc": 2, "rep": {"var": "v", "coeffs": {"0": "1"}}}


def test_unified_figure_eight_at_one(capsys):
    assert main(["eval-root", "--knot", "fig8", "--order", "1", "--trunc", "1"]) == 0
    assert capsys.readouterr().out.strip() == "1 mod Phi_1"


def test_unified_reports_a_short_table(tmp_path, capsys):
    path = tmp_path / "unknot.json"
    path.write_text(json.dumps(unknot_table(2, 2).to_json()), encoding="utf-8")

    assert main(["unified", "--input", str(path), "--trunc", "1"]) == 1
    error = json.loads(capsys.readouterr().err)

    assert error["error"] == "insufficient_bound"
    assert error["truncation"] == 1


def test_root_evaluation(capsys):
    assert main(["eval-root", "--order", "1", "--trunc", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1 mod Phi_1"

    assert main(["eval-root", "--order", "3", "--trunc", "2"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_taylor_from_file(tmp_path, capsys):
    path = tmp_path / "element.json"
    path.write_text(json.dumps({"trunc": 3, "rep": {"var": "v", "coeffs": {"0": "1", "2": "-1"}}}), encoding="utf-8")

    assert main(["taylor", "--input", str(path), "--digits", "2"]) == 0
    assert capsys.readouterr().out.strip() == "0 -1 0"


def test_divisibility_rows(capsys):
    assert main(["divisibility", "--lambda", "1", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)

    assert [row["n"] for row in rows] == [0, 1]


def test_bad_inputs(tmp_path, capsys):
    assert main(["fpoly", "--lambda", "1,1,1", "--N", "2"]) == 2
    capsys.readouterr()

    path = tmp_path / "table.json"
    path.write_text(json.dumps({"N": 2}), encoding="utf-8")
    assert main(["expand-knot", "--input", str(path)]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "invalid_table"

    assert main(["expand-knot", "--knot", "fig8", "--N", "3"]) == 2


def test_selftest_with_missing_golden(tmp_path, capsys):
    assert main(["selftest", "--golden", str(tmp_path / "absent.json")]) == 2
    assert "absent.json" in capsys.readouterr().err


def test_parser_requires_a_command():
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args([])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit):
        main(["unified", "--sign", "0"])
