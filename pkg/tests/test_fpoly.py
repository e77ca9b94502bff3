from __future__ import annotations

import pytest

from qinterp.interp import (
    F_poly,
    cross_check_F,
    from_nonsymmetric,
    leading_term_check,
    nonsymmetric_coeffs,
    one_row_partial_expansion,
)
from qinterp.interp.fpoly import divided_difference, longest_word
from qinterp.partitions import EMPTY, Partition, partitions_up_to
from qinterp.qring import LaurentV
from qinterp.symfun import EvalPoint, SymPoly, eval_sym, schur


def test_small_polynomials_at_two_variables():
    s1 = schur(Partition.of(1), 2)

    assert F_poly(EMPTY, 2) == SymPoly.constant(2, -1)
    assert F_poly(Partition.of(1), 2) == s1 * LaurentV.q(1) - SymPoly.constant(2, LaurentV.from_expr("q + 1"))
    assert eval_sym(F_poly(Partition.of(1), 2), EvalPoint.node(EMPTY, 2)) == 0


def test_too_many_parts_is_rejected():
    with pytest.raises(ValueError):
        F_poly(Partition.of(1, 1, 1), 2)
    with pytest.raises(ValueError):
        F_poly(EMPTY, 0)


def test_divided_difference_and_longest_word():
    # x1^2 -> (x1^2 - x2^2) / (x1 - x2)
    difference = divided_difference({(2, 0): LaurentV.one()}, 0)

    assert difference == {(1, 0): LaurentV.one(), (0, 1): LaurentV.one()}
    assert divided_difference({(1, 1): LaurentV.one()}, 0) == {}
    assert longest_word(2) == [0]
    assert longest_word(3) == [0, 1, 0]


@pytest.mark.parametrize("partition", partitions_up_to(3, 2))
def test_divided_differences_agree_with_determinant_n2(partition):
    assert cross_check_F(partition, 2) == F_poly(partition, 2)


@pytest.mark.parametrize("partition", [EMPTY, Partition.of(1), Partition.of(1, 1), Partition.of(2, 1), Partition.of(1, 1, 1)])
def test_divided_differences_agree_with_determinant_n3(partition):
    cross_check_F(partition, 3)


@pytest.mark.parametrize("nvars", [1, 2, 3])
def test_top_degree_term(nvars):
    for partition in partitions_up_to(3, nvars):
        assert leading_term_check(partition, nvars)


@pytest.mark.parametrize("n", range(0, 5))
def test_one_row_partial_expansion(n):
    assert one_row_partial_expansion(n) == F_poly(Partition.of(n), 2)


@pytest.mark.parametrize("partition", [Partition.of(1), Partition.of(2, 1), Partition.of(3)])
def test_nonsymmetric_basis_round_trip(partition):
    coefficients = nonsymmetric_coeffs(partition, 2)

    assert from_nonsymmetric(coefficients, 2) == F_poly(partition, 2)
