from __future__ import annotations

import pytest

from qinterp.errors import NotDivisible
from qinterp.qring import (
    CyclotomicResidue,
    LaurentV,
    RationalQ,
    balanced_qbinom,
    balanced_qnum,
    curly,
    cyclotomic,
    divide_exact,
    divides,
    eval_at_root,
    poch,
    qbinom,
    qfactorial,
    shifted_poch,
)

q = LaurentV.q


def test_laurent_arithmetic_and_equality():
    a = LaurentV.from_expr("q**-1 + 2*q")
    b = LaurentV.from_expr("1 - q")

    assert a + b == LaurentV.from_expr("q**-1 + 1 + q")
    assert a * b == LaurentV.from_expr("q**-1 - 1 + 2*q - 2*q**2")
    assert a - a == 0
    assert LaurentV.one() == 1
    assert q(2).bar() == q(-2)
    assert (q(1) + q(-1)).bar() == q(1) + q(-1)


def test_laurent_keeps_odd_powers_of_v():
    value = LaurentV.v(1) + LaurentV.v(-1)

    assert not value.is_q_polynomial
    assert value * value == LaurentV.from_expr("q + 2 + q**-1")
    assert balanced_qnum(2) == value


def test_rendering_uses_descending_q_powers():
    assert str(LaurentV.from_expr("-(q + 1)")) == "-q - 1"
    assert str(LaurentV.from_expr("q**-3 - 2*q**12")) == "-2q^{12} + q^{-3}"
    assert str(LaurentV.zero()) == "0"


def test_laurent_json_round_trip():
    value = LaurentV.from_expr("q**-2*(q**3 - 1)")

    assert value.to_json() == {"var": "v", "coeffs": {"-4": "-1", "2": "1"}}
    assert LaurentV.from_json(value.to_json()) == value
    with pytest.raises(ValueError):
        LaurentV.from_json({"var": "q", "coeffs": {}})


def test_divide_exact_and_remainder():
    assert divide_exact(poch(3), poch(2)) == LaurentV.from_expr("1 - q**3")
    assert divide_exact(q(5, 3), q(2)) == q(3, 3)
    assert divides(LaurentV.from_expr("1 - q**4"), LaurentV.from_expr("1 + q**2"))

    with pytest.raises(NotDivisible) as excinfo:
        divide_exact(LaurentV.from_expr("1 + q"), LaurentV.from_expr("1 - q"))
    assert excinfo.value.remainder is not None
    assert excinfo.value.to_dict()["error"] == "not_divisible"
    with pytest.raises(ZeroDivisionError):
        divide_exact(LaurentV.one(), LaurentV.zero())


def test_rational_normalization_is_structural():
    one_minus_q = LaurentV.from_expr("1 - q")
    reduced = RationalQ(poch(2), one_minus_q)

    assert reduced.is_laurent
    assert reduced == RationalQ(LaurentV.from_expr("1 - q**2"))
    assert RationalQ(q(2), q(1)) == RationalQ(q(1))
    assert RationalQ(-1, LaurentV.from_expr("q - 1")) == RationalQ(1, one_minus_q)
    assert RationalQ.from_expr("-q/(1 - q)") == RationalQ(-q(1), one_minus_q)


def test_rational_arithmetic():
    x = RationalQ.from_expr("q/(1 - q)")
    y = RationalQ.from_expr("1/(1 - q)")

    assert y - x == 1
    assert (x * y).denominator == LaurentV.from_expr("1 - 2*q + q**2")
    assert x / x == 1
    assert x.inverse() == RationalQ.from_expr("(1 - q)/q")
    assert x.bar() == RationalQ.from_expr("1/(q - 1)")


def test_rational_rejects_uncleared_content_and_non_laurent():
    with pytest.raises(ValueError, match="integer content"):
        RationalQ(1, 2)
    with pytest.raises(ValueError, match="integer content"):
        RationalQ(q(1), LaurentV.from_expr("2 - 2*q"))
    assert RationalQ(2, LaurentV.from_expr("2 - 2*q")) == RationalQ(1, LaurentV.from_expr("1 - q"))
    with pytest.raises(NotDivisible):
        RationalQ(1, LaurentV.from_expr("1 - q")).to_laurent()


def test_q_pochhammer_and_binomials():
    assert poch(0) == 1
    assert poch(2) == LaurentV.from_expr("(1 - q)*(1 - q**2)")
    assert shifted_poch(0, 3) == 0
    assert shifted_poch(2, 2) == LaurentV.from_expr("(1 - q**2)*(1 - q**3)")
    assert qbinom(4, 2) == LaurentV.from_expr("1 + q + 2*q**2 + q**3 + q**4")
    assert qbinom(3, 5) == 0
    assert qfactorial(3) == LaurentV.from_expr("(1 + q)*(1 + q + q**2)")
    with pytest.raises(ValueError):
        poch(-1)


@pytest.mark.parametrize("a", range(0, 7))
def test_balanced_binomial_is_bar_invariant(a):
    for b in range(a + 1):
        value = balanced_qbinom(a, b)
        assert value.bar() == value
        assert value.subs_power(0) == qbinom(a, b).value_at_one()


def test_balanced_numbers_and_curly():
    assert balanced_qnum(3) == LaurentV.from_expr("q + 1 + q**-1")
    assert balanced_qnum(-2) == -balanced_qnum(2)
    assert balanced_qnum(0) == 0
    assert curly(2) == LaurentV.from_expr("q - q**-1")
    assert curly(4) == curly(2) * (q(1) + q(-1))


def test_cyclotomic_polynomials():
    assert cyclotomic(1) == LaurentV.from_expr("q - 1")
    assert cyclotomic(3) == LaurentV.from_expr("1 + q + q**2")
    assert cyclotomic(4) == LaurentV.from_expr("1 + q**2")
    assert divides(LaurentV.from_expr("1 - q**6"), cyclotomic(6))


def test_root_of_unity_residues():
    assert eval_at_root(q(3), 3) == CyclotomicResidue.from_int(1, 3)
    assert eval_at_root(q(-1), 4) == eval_at_root(q(1, -1), 4)
    assert eval_at_root(cyclotomic(5), 5).is_zero

    two = CyclotomicResidue.from_int(2, 3)
    assert two * two == CyclotomicResidue.from_int(4, 3)
    assert (two - two).is_zero
    with pytest.raises(ValueError):
        two + CyclotomicResidue.from_int(1, 4)


def test_laurent_accessors():
    value = LaurentV.from_expr("3*q**-1 + 2*q**2")

    assert value.q_coefficient(-1) == 3
    assert value.q_coefficient(1) == 0
    assert (value.min_exponent, value.max_exponent) == (-2, 4)
    assert LaurentV.coerce(5).constant_value() == 5
    assert RationalQ.from_expr("q/(1 - q**2)").is_q_rational
    assert not RationalQ(LaurentV.v(1), LaurentV.from_expr("1 - q")).is_q_rational
    with pytest.raises(ValueError):
        value.constant_value()
    with pytest.raises(ValueError):
        LaurentV.zero().min_exponent
