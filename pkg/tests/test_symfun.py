from __future__ import annotations

import pytest

from qinterp.partitions import EMPTY, Partition, partitions_up_to
from qinterp.qring import LaurentV, balanced_qnum
from qinterp.symfun import (
    EvalPoint,
    SymPoly,
    dimq,
    e_top,
    eval_sym,
    from_schur,
    hopf_schur,
    pieri_terms,
    schur,
    schur_expansion,
    schur_principal,
)

q = LaurentV.q


def test_schur_polynomials_in_two_variables():
    assert schur(Partition.of(1), 2) == SymPoly.monomial(Partition.of(1), 2)
    assert schur(Partition.of(1, 1), 2) == e_top(2)
    assert schur(Partition.of(2), 2) == SymPoly.monomial(Partition.of(2), 2) + SymPoly.monomial(Partition.of(1, 1), 2)
    assert schur(Partition.of(1, 1, 1), 2).is_zero
    assert schur(EMPTY, 3) == SymPoly.one(3)


def test_schur_expansion_inverts_from_schur():
    coefficients = {Partition.of(2, 1): q(3), Partition.of(1): LaurentV.from_expr("-(q + 1)"), EMPTY: LaurentV.one()}

    assert schur_expansion(from_schur(coefficients, 2)) == coefficients


def test_evaluation_at_points():
    s1 = schur(Partition.of(1), 2)

    assert eval_sym(s1, EvalPoint.from_q_exponents((1, 2))) == q(1) + q(2)
    assert eval_sym(s1, EvalPoint.staircase(2)) == q(-1) + 1
    assert EvalPoint.node(Partition.of(1), 2).v_exponents == (-4, 0)
    with pytest.raises(ValueError):
        eval_sym(s1, EvalPoint.staircase(3))


def test_symmetric_arithmetic():
    s1 = schur(Partition.of(1), 2)

    assert s1 * s1 == schur(Partition.of(2), 2) + schur(Partition.of(1, 1), 2)
    assert (s1 - s1).is_zero
    assert (s1 * 3).coefficient(Partition.of(1)) == 3
    assert s1.degree == 1
    assert SymPoly.from_json(s1.to_json()) == s1
    with pytest.raises(ValueError):
        SymPoly.from_full_terms(2, {(1, 0): 1})


@pytest.mark.parametrize("partition", partitions_up_to(4, 3))
def test_principal_specialization_matches_evaluation(partition):
    # schur_principal compares the hook-content formula with direct evaluation
    schur_principal(partition, 3)


def test_quantum_dimensions():
    assert dimq(EMPTY, 2) == 1
    assert dimq(Partition.of(1), 2) == balanced_qnum(2)
    assert dimq(Partition.of(2), 2) == balanced_qnum(3)
    assert dimq(Partition.of(1, 1), 2) == 1
    assert dimq(Partition.of(1, 1), 3) == balanced_qnum(3)
    assert dimq(Partition.of(2, 1), 2).subs_power(0) == 2
    with pytest.raises(ValueError):
        dimq(Partition.of(1, 1, 1), 2)


def test_hopf_pairing_of_modules_is_symmetric():
    partitions = partitions_up_to(2, 2)
    for first in partitions:
        for second in partitions:
            assert hopf_schur(first, second, 2) == hopf_schur(second, first, 2)
    assert hopf_schur(EMPTY, Partition.of(1), 2) == dimq(Partition.of(1), 2)


def test_pieri_terms():
    assert list(pieri_terms(Partition.of(1), 2)) == [Partition.of(2), Partition.of(1, 1)]
    assert list(pieri_terms(Partition.of(1, 1), 2)) == [Partition.of(2, 1)]
