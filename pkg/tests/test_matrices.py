from __future__ import annotations

import pytest

from qinterp.errors import IntegrityError
from qinterp.interp import (
    build_c_matrix,
    build_d_matrix,
    c_entry,
    compare_routes,
    d_entry_okounkov,
    diag_checked,
    diag_value,
    identity_check,
    interpolate_sym,
    stable_c_entry,
    vanishing_check,
)
from qinterp.partitions import EMPTY, Partition, sub_partitions
from qinterp.qring import LaurentV, RationalQ


def _pair(key: str):
    inner, outer = key.split("|")
    return Partition.from_key(inner), Partition.from_key(outer)


def test_c_entries_match_golden_tables(golden):
    for key, text in golden["c_matrix"].items():
        inner, outer = _pair(key)
        assert c_entry(inner, outer, 2) == LaurentV.from_expr(text), key


def test_d_entries_match_golden_tables(golden):
    for key, text in golden["d_matrix"].items():
        inner, outer = _pair(key)
        assert d_entry_okounkov(inner, outer, 2) == RationalQ.from_expr(text), key


def test_entries_vanish_outside_containment():
    assert vanishing_check(2, Partition.of(3, 3)) == []
    assert c_entry(Partition.of(2), Partition.of(1, 1), 2) == 0
    assert d_entry_okounkov(Partition.of(2), Partition.of(1, 1), 2) == 0
    with pytest.raises(ValueError):
        c_entry(EMPTY, Partition.of(1, 1, 1), 2)


@pytest.mark.parametrize("nvars", [1, 2, 3])
def test_diagonal_closed_form(nvars):
    for partition in sub_partitions(Partition.of(2, 1)):
        if partition.length <= nvars:
            assert diag_checked(partition, nvars) == c_entry(partition, partition, nvars)


def test_c_and_d_are_inverse():
    bound = Partition.of(2, 2)
    c_matrix = build_c_matrix(2, bound, workers=1)
    d_matrix = build_d_matrix(2, bound, workers=1)

    assert identity_check(c_matrix, d_matrix) == []
    assert c_matrix.get(EMPTY, EMPTY) == -1
    assert c_matrix.get(Partition.of(2), Partition.of(1, 1)) == 0
    assert d_matrix.get(Partition.of(2), Partition.of(1, 1)) == 0
    assert [outer for outer in c_matrix.row(Partition.of(2, 1))] == [Partition.of(2, 1), Partition.of(2, 2)]


def test_identity_detects_a_broken_entry():
    bound = Partition.of(1, 1)
    c_matrix = build_c_matrix(2, bound, workers=1)
    d_matrix = build_d_matrix(2, bound, workers=1)
    d_matrix.entries[(EMPTY, EMPTY)] = RationalQ(1)

    assert "(C.D)[(0),(0)]" in identity_check(c_matrix, d_matrix)


def test_both_routes_to_d_agree():
    assert compare_routes(2, Partition.of(3, 2)) == []
    assert compare_routes(3, Partition.of(2, 1, 1)) == []
    with pytest.raises(ValueError):
        build_d_matrix(2, Partition.of(1), route="cholesky")


def test_interpolation_recovers_a_basis_element():
    bound = Partition.of(2, 1)
    values = {mu: c_entry(Partition.of(1), mu, 2) for mu in sub_partitions(bound)}

    coefficients = interpolate_sym(values, bound, 2)

    assert coefficients[Partition.of(1)] == 1
    assert all(value == 0 for partition, value in coefficients.items() if partition != Partition.of(1))


def test_interpolation_requires_every_node():
    with pytest.raises(ValueError):
        interpolate_sym({EMPTY: LaurentV.one()}, Partition.of(1), 2)


def test_stable_entries_do_not_depend_on_n():
    for outer in sub_partitions(Partition.of(2, 1)):
        for inner in sub_partitions(outer):
            assert stable_c_entry(inner, outer, 2) == stable_c_entry(inner, outer, 3)


def test_diag_value_rejects_long_partitions():
    with pytest.raises(ValueError):
        diag_value(Partition.of(1, 1, 1), 2)


def test_diag_checked_raises_on_mismatch(monkeypatch):
    from qinterp.interp import matrices

    monkeypatch.setattr(matrices, "diag_value", lambda partition, nvars: LaurentV.q(7))
    with pytest.raises(IntegrityError):
        matrices.diag_checked(Partition.of(1), 2)
