from __future__ import annotations

import logging

import pytest

from qinterp.errors import InsufficientBound
from qinterp.habiro import embed, eval_root, one
from qinterp.knotcyclo import (
    KirbyWeight,
    a_coeffs,
    divisibility_exponent,
    figure_eight_table,
    kirby_color,
    kirby_constant,
    kirby_pairing_check,
    kirby_trace,
    knot_pprime_value,
    omega_pairing,
    surgery_ledger,
    twist_value,
    unified_invariant,
    unknot_table,
)
from qinterp.knotcyclo.kirby import coverage, pprime_pairing
from qinterp.partitions import D_N, EMPTY, Partition, partitions_up_to
from qinterp.qring import CyclotomicResidue, LaurentV, RationalQ, balanced_qnum

q = LaurentV.q


@pytest.mark.parametrize("partition", [EMPTY, Partition.of(1)])
def test_kirby_color_pairings(partition):
    for color in partitions_up_to(2, 2):
        assert kirby_pairing_check(partition, color, 2), color


def test_pairing_is_not_diagonal_below_the_color():
    assert pprime_pairing(EMPTY, Partition.of(1), 2) == -balanced_qnum(2)
    assert pprime_pairing(Partition.of(1, 1), Partition.of(3), 2) == 0


def test_constants_and_weights():
    assert kirby_constant(Partition.of(1), 2) == 1
    assert KirbyWeight(1, 2)(EMPTY) == -1
    assert KirbyWeight(-1, 2)(EMPTY) == -1
    assert KirbyWeight(-1, 2).exponent(Partition.of(1)) == KirbyWeight(1, 2).exponent(Partition.of(1)) + 2
    with pytest.raises(ValueError):
        KirbyWeight(0, 2)
    with pytest.raises(ValueError):
        twist_value(0, EMPTY, 2)


def test_twist_values():
    assert twist_value(1, EMPTY, 2) == 1
    assert twist_value(1, Partition.of(1), 2) == balanced_qnum(2).shift(-2)
    assert twist_value(-1, Partition.of(1), 2) == balanced_qnum(2).shift(2)
    assert twist_value(-1, Partition.of(1, 1), 2) == q(1)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("color", partitions_up_to(3, 2))
def test_omega_pairs_to_the_framed_unknot(sign, color):
    assert omega_pairing(sign, color, 2) == twist_value(sign, color, 2)


def test_omega_on_the_fundamental_color():
    assert omega_pairing(1, Partition.of(1), 2) == balanced_qnum(2).shift(-2)
    assert omega_pairing(-1, Partition.of(1), 2) == balanced_qnum(2).shift(2)


def test_kirby_color_coefficients():
    assert kirby_color(1, EMPTY, 2) == -1
    assert kirby_color(1, Partition.of(1), 2) == RationalQ(q(-1) - 1)
    assert kirby_color(-1, Partition.of(1), 2) == RationalQ(q(1) - 1)


@pytest.mark.parametrize("nvars", [2, 3])
@pytest.mark.parametrize("sign", [1, -1])
def test_empty_color_matches_the_monomial_weight(nvars, sign):
    expected = KirbyWeight(sign, nvars)(EMPTY) * q(-2 * D_N(EMPTY, nvars))

    assert kirby_color(sign, EMPTY, nvars) == RationalQ(expected)


@pytest.mark.parametrize("sign", [1, -1])
def test_nonempty_traces_vanish_at_one(sign):
    for partition in partitions_up_to(4, 2):
        trace = kirby_trace(sign, partition, 2)
        if partition == EMPTY:
            assert trace == -1
        else:
            assert trace.is_q_polynomial
            assert trace.value_at_one() == 0


def test_figure_eight_pprime_values():
    coeffs = a_coeffs(figure_eight_table(Partition.of(2, 1)), Partition.of(2, 1), route="substitution")
    value = knot_pprime_value(coeffs, Partition.of(1))

    assert value == LaurentV.from_expr("q**-3*(q + 1)*(q**3 - 1)")
    assert divisibility_exponent(value) == 1


def test_divisibility_exponent_edge_cases():
    assert divisibility_exponent(LaurentV.zero()) is None
    assert divisibility_exponent(LaurentV.v(1)) == 0
    assert divisibility_exponent(LaurentV.one()) == 0
    assert divisibility_exponent(LaurentV.from_expr("(1 - q)*(1 - q**2)*q**-4")) == 2


def test_coverage_sizes():
    assert coverage(2, 1) == 6
    assert coverage(2, 3) == 18
    assert coverage(3, 2) == 24


@pytest.mark.parametrize("trunc", [1, 2, 3])
@pytest.mark.parametrize("sign", [1, -1])
def test_surgery_on_the_unknot_at_two_variables(trunc, sign):
    table = unknot_table(2, coverage(2, trunc) - 1)

    assert unified_invariant(table, sign, trunc) == one(trunc)


def test_surgery_on_the_unknot_at_three_variables():
    table = unknot_table(3, coverage(3, 1) - 1)

    assert unified_invariant(table, 1, 1) == one(1)
    assert unified_invariant(table, -1, 1) == one(1)


@pytest.mark.parametrize("trunc", [1, 2, 3])
@pytest.mark.parametrize("sign", [1, -1])
def test_surgery_on_the_figure_eight_is_one_at_q_equals_one(trunc, sign):
    table = figure_eight_table(coverage(2, trunc) - 1)
    element = unified_invariant(table, sign, trunc)

    assert element.trunc == trunc
    assert eval_root(element, 1) == CyclotomicResidue.from_int(1, 1)


def test_figure_eight_terms_lie_in_the_first_ideal():
    rows = surgery_ledger(figure_eight_table(5), 1, 5)

    assert rows[0]["partition"] == EMPTY
    assert rows[0]["term"] == 1
    for row in rows[1:]:
        assert row["divisibility"] is None or row["divisibility"] >= 1, row["partition"]
    assert rows[1]["divisibility"] >= 2


def test_short_table_raises():
    with pytest.raises(InsufficientBound) as excinfo:
        unified_invariant(unknot_table(2, 3), 1, 1)
    assert excinfo.value.truncation == 1
    assert excinfo.value.to_dict()["error"] == "insufficient_bound"
    with pytest.raises(ValueError):
        unified_invariant(unknot_table(2, 5), 1, 0)


def test_extra_coefficients_are_checked_against_the_ideal(caplog):
    table = figure_eight_table(7)
    coeffs = a_coeffs(table, 7, route="substitution")

    with caplog.at_level(logging.WARNING):
        element = unified_invariant(table, 1, 1, coeffs=coeffs)

    assert element == unified_invariant(figure_eight_table(5), 1, 1)
    assert not caplog.records


def test_surgery_ledger_rows():
    rows = surgery_ledger(unknot_table(2, 2), 1, 2)

    assert rows[0]["partition"] == EMPTY
    assert rows[0]["term"] == 1
    assert rows[0]["monomial"] == 1
    assert rows[1]["divisibility"] is None
