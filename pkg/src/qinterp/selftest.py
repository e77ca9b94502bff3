"""Golden checks against the printed gl2 tables and the structural identities."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping

from .errors import QInterpError
from .habiro import embed, eval_root
from .interp import (
    build_c_matrix,
    build_d_matrix,
    c_entry,
    compare_routes,
    d_entry_hopf,
    d_entry_okounkov,
    hopf_norm,
    identity_check,
    orthogonality_failures,
    schur_coefficients,
    vanishing_check,
)
from .knotcyclo import (
    a_coeffs,
    figure_eight_table,
    kirby_pairing_check,
    omega_pairing,
    round_trip_failures,
    sl2_a_coeffs,
    sl2_reconstruct,
    twist_value,
    unified_invariant,
    unknot_table,
)
from .knotcyclo.kirby import coverage
from .knotcyclo.sl2 import sl2_values
from .knotcyclo.tables import DATA_DIR
from .partitions import Partition, partitions_up_to
from .qring import CyclotomicResidue, LaurentV, RationalQ

GOLDEN_PATH = DATA_DIR / "golden" / "gl2_tables.json"
GOLDEN_SECTIONS = ("schur", "c_matrix", "d_matrix", "hopf_norm", "figure_eight")


@dataclass
class CheckResult:
    name: str
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SelftestReport:
    """Outcome of every golden and structural check."""

    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> List[str]:
        return [f"{check.name}: {failure}" for check in self.checks for failure in check.failures]

    def to_dict(self) -> Dict[str, object]:
        return {
            "ok": self.ok,
            "checks": {check.name: check.failures for check in self.checks},
        }


def load_golden(path: Path = GOLDEN_PATH) -> Dict[str, Mapping[str, object]]:
    """Read the golden file; a missing file or section is an error, never a skip."""

    if not path.exists():
        raise FileNotFoundError(f"golden data {path} is missing")
    with path.open("r", encoding="utf-8") as handle:
        payload = json.load(handle)
    missing = [name for name in GOLDEN_SECTIONS if name not in payload]
    if missing:
        raise ValueError(f"golden data {path} lacks sections: {', '.join(missing)}")
    return payload


def _pair(key: str) -> tuple:
    inner, _, outer = key.partition("|")
    return Partition.from_key(inner), Partition.from_key(outer)


def _check_schur(golden: Mapping[str, Mapping[str, str]]) -> List[str]:
    failures = []
    for key, expected in golden.items():
        partition = Partition.from_key(key)
        wanted = {Partition.from_key(k): LaurentV.from_expr(v) for k, v in expected.items()}
        actual = {p: v for p, v in schur_coefficients(partition, 2).items() if not v.is_zero}
        if actual != wanted:
            failures.append(f"F{partition}")
    return failures


def _check_c(golden: Mapping[str, str]) -> List[str]:
    failures = [f"c{inner},{outer} does not vanish" for inner, outer in vanishing_check(2, Partition.of(3, 3))]
    for key, text in golden.items():
        inner, outer = _pair(key)
        if c_entry(inner, outer, 2) != LaurentV.from_expr(text):
            failures.append(f"c{inner},{outer}")
    return failures


def _check_d(golden: Mapping[str, str]) -> List[str]:
    failures = []
    for key, text in golden.items():
        inner, outer = _pair(key)
        expected = RationalQ.from_expr(text)
        if d_entry_okounkov(inner, outer, 2) != expected:
            failures.append(f"d{inner},{outer} (closed form)")
        if d_entry_hopf(outer, inner, 2) != expected:
            failures.append(f"d{inner},{outer} (Schur expansion)")
    return failures


def _check_identity(nvars: int, bound: Partition) -> List[str]:
    c_matrix = build_c_matrix(nvars, bound)
    d_matrix = build_d_matrix(nvars, bound)
    failures = identity_check(c_matrix, d_matrix)
    failures.extend(f"routes differ at {inner},{outer}" for inner, outer in compare_routes(nvars, bound))
    return failures


def _check_norms(golden: Mapping[str, str]) -> List[str]:
    failures = [f"{key}" for key, text in golden.items() if hopf_norm(Partition.from_key(key), 2) != LaurentV.from_expr(text)]
    failures.extend(f"Gram entry {a},{b}" for a, b in orthogonality_failures(partitions_up_to(4, 2), 2))
    return failures


def _check_figure_eight(golden: Mapping[str, str]) -> List[str]:
    failures = []
    coeffs = a_coeffs(figure_eight_table(Partition.of(2, 1)), Partition.of(2, 1), route="both")
    for key, text in golden.items():
        partition = Partition.from_key(key)
        if coeffs.get(partition) != LaurentV.from_expr(text):
            failures.append(f"a{partition}")
    table = figure_eight_table(Partition.of(3, 3))
    full = a_coeffs(table, Partition.of(3, 3), route="both")
    failures.extend(f"round trip at {mu}" for mu in round_trip_failures(table, full))
    return failures


def _check_unified() -> List[str]:
    failures = []
    for trunc in range(1, 7):
        table = unknot_table(2, coverage(2, trunc) - 1)
        for sign in (1, -1):
            if unified_invariant(table, sign, trunc) != embed(LaurentV.one(), trunc):
                failures.append(f"unknot sign {sign:+d} at T={trunc}")
    for trunc in (1, 2):
        table = figure_eight_table(coverage(2, trunc) - 1)
        for sign in (1, -1):
            if eval_root(unified_invariant(table, sign, trunc), 1) != CyclotomicResidue.from_int(1, 1):
                failures.append(f"fig8 sign {sign:+d} at T={trunc} is not 1 at q=1")
    return failures


def _check_kirby() -> List[str]:
    colors = partitions_up_to(3, 2)
    failures = [
        f"P'{partition} against {color}"
        for partition in partitions_up_to(2, 2)
        for color in colors
        if not kirby_pairing_check(partition, color, 2)
    ]
    failures.extend(
        f"omega{sign:+d} against {color}"
        for sign in (1, -1)
        for color in colors
        if omega_pairing(sign, color, 2) != twist_value(sign, color, 2)
    )
    return failures


def _check_sl2() -> List[str]:
    values = sl2_values(figure_eight_table(4), 4)
    coefficients = sl2_a_coeffs(values)
    failures = [f"a_{n} != 1" for n, a in enumerate(coefficients) if a != LaurentV.one()]
    failures.extend(f"V_{j}" for j, value in enumerate(values) if sl2_reconstruct(coefficients, j) != value)
    return failures


def _check_habiro() -> List[str]:
    q = LaurentV.q()
    return [f"T={t}" for t in range(1, 9) if embed(q, t) * embed(q.bar(), t) != embed(LaurentV.one(), t)]


def run_selftest(golden_path: Path = GOLDEN_PATH, full: bool = False) -> SelftestReport:
    """Run every check; ``full`` adds the ``N = 3`` identity on ``(2,2,2)``."""

    golden = load_golden(golden_path)
    plan: List[tuple] = [
        ("schur", lambda: _check_schur(golden["schur"])),
        ("c_matrix", lambda: _check_c(golden["c_matrix"])),
        ("d_matrix", lambda: _check_d(golden["d_matrix"])),
        ("identity_N2", lambda: _check_identity(2, Partition.of(3, 3))),
        ("hopf_norm", lambda: _check_norms(golden["hopf_norm"])),
        ("figure_eight", lambda: _check_figure_eight(golden["figure_eight"])),
        ("kirby", _check_kirby),
        ("unified", _check_unified),
        ("sl2", _check_sl2),
        ("habiro", _check_habiro),
    ]
    if full:
        plan.append(("identity_N3", lambda: _check_identity(3, Partition.of(2, 2, 2))))

    report = SelftestReport()
    for name, check in plan:
        result = CheckResult(name)
        try:
            result.failures.extend(check())
        except QInterpError as exc:
            result.failures.append(f"{exc.kind}: {exc}")
        if result.failures:
            logging.error("Selftest %s failed: %s", name, "; ".join(result.failures))
        else:
            logging.info("Selftest %s passed", name)
        report.checks.append(result)
    return report


__all__ = ["CheckResult", "GOLDEN_PATH", "SelftestReport", "load_golden", "run_selftest"]
