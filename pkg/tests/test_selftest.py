from __future__ import annotations

import json

import pytest

from qinterp.selftest import load_golden, run_selftest


def test_packaged_golden_file_passes():
    report = run_selftest()

    assert report.ok, report.failures
    assert [check.name for check in report.checks] == [
        "schur",
        "c_matrix",
        "d_matrix",
        "identity_N2",
        "hopf_norm",
        "figure_eight",
        "kirby",
        "unified",
        "sl2",
        "habiro",
    ]
    assert report.to_dict()["ok"] is True


def test_perturbed_entry_is_reported(golden_file):
    payload = json.loads(golden_file.read_text(encoding="utf-8"))
    payload["d_matrix"]["[1]|[1]"] = "7"
    golden_file.write_text(json.dumps(payload), encoding="utf-8")

    report = run_selftest(golden_file)
    checks = {check.name: check for check in report.checks}

    assert not report.ok
    assert "d(1),(1) (closed form)" in checks["d_matrix"].failures
    assert "d(1),(1) (Schur expansion)" in checks["d_matrix"].failures
    assert checks["c_matrix"].ok
    assert "d_matrix: d(1),(1) (closed form)" in report.failures


def test_missing_golden_data_is_an_error(tmp_path, golden_file):
    with pytest.raises(FileNotFoundError):
        load_golden(tmp_path / "absent.json")

    payload = json.loads(golden_file.read_text(encoding="utf-8"))
    del payload["hopf_norm"]
    golden_file.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(ValueError):
        load_golden(golden_file)
