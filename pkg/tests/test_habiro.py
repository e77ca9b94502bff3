from __future__ import annotations

import random

import pytest

from qinterp.habiro import (
    HabiroElement,
    embed,
    eval_root,
    from_series,
    laurent_membership,
    one,
    q_inverse,
    taylor_at_1,
)
from qinterp.qring import LaurentV, eval_at_root, poch

q = LaurentV.q


@pytest.mark.parametrize("trunc", range(1, 9))
def test_q_is_invertible(trunc):
    assert embed(q(1), trunc) * embed(q(-1), trunc) == one(trunc)
    assert embed(q(1), trunc) * HabiroElement(trunc, q_inverse(trunc)) == one(trunc)


def test_representative_is_canonical():
    rng = random.Random(20240611)
    for _ in range(10):
        trunc = rng.randint(1, 4)
        p = LaurentV.from_q_coeffs({e: rng.randint(-3, 3) for e in range(rng.randint(1, 12))})
        r = LaurentV.from_q_coeffs({e: rng.randint(-3, 3) for e in range(rng.randint(1, 4))})
        assert embed(p + r * poch(trunc), trunc) == embed(p, trunc)


def _random_laurent(rng: random.Random, low: int, high: int) -> LaurentV:
    return LaurentV.from_q_coeffs({e: rng.randint(-4, 4) for e in range(low, high)})


def test_values_do_not_depend_on_the_representative():
    rng = random.Random(20240612)
    for _ in range(20):
        trunc = rng.randint(1, 5)
        x = _random_laurent(rng, rng.randint(-3, 0), rng.randint(1, 10))
        y = _random_laurent(rng, rng.randint(-2, 0), rng.randint(1, 5))
        original = embed(x, trunc)
        shifted = embed(x + y * poch(trunc), trunc)

        assert shifted == original
        for order in range(1, trunc + 1):
            assert eval_root(shifted, order) == eval_root(original, order) == eval_at_root(x, order)
        assert taylor_at_1(shifted, trunc - 1) == taylor_at_1(original, trunc - 1)


@pytest.mark.parametrize("trunc", [1, 2, 3, 5])
def test_embedding_is_a_ring_map(trunc):
    rng = random.Random(trunc)
    for _ in range(10):
        a = _random_laurent(rng, rng.randint(-4, 0), rng.randint(1, 9))
        b = _random_laurent(rng, rng.randint(-4, 0), rng.randint(1, 9))

        assert embed(a + b, trunc) == embed(a, trunc) + embed(b, trunc)
        assert embed(a - b, trunc) == embed(a, trunc) - embed(b, trunc)
        assert embed(a * b, trunc) == embed(a, trunc) * embed(b, trunc)


def test_arithmetic_requires_matching_truncations():
    with pytest.raises(ValueError):
        one(2) + one(3)
    with pytest.raises(ValueError):
        embed(q(1), 0)
    with pytest.raises(ValueError):
        embed(LaurentV.v(1), 2)
    assert (one(3) - one(3)).is_zero


def test_truncate_and_bar():
    element = embed(q(2), 3)

    assert element.truncate(1) == one(1)
    assert element.bar() == embed(q(-2), 3)
    assert element.bar().bar() == element
    with pytest.raises(ValueError):
        element.truncate(4)


def test_series_in_pochhammer_symbols():
    assert from_series([LaurentV.one(), LaurentV.one()], 1) == one(1)
    assert from_series([LaurentV.zero(), LaurentV.one()], 2) == embed(LaurentV.from_expr("1 - q"), 2)
    assert from_series([LaurentV.zero(), LaurentV.zero(), q(5)], 2).is_zero


def test_values_at_roots_of_unity():
    element = embed(q(1), 3)

    assert eval_root(element, 3) == eval_at_root(q(1), 3)
    assert str(eval_root(one(2), 1)) == "1 mod Phi_1"
    with pytest.raises(ValueError):
        eval_root(element, 4)
    with pytest.raises(ValueError):
        eval_root(element, 0)


def test_taylor_coefficients_at_one():
    assert taylor_at_1(embed(LaurentV.from_expr("1 - q"), 3), 2) == [0, -1, 0]
    assert taylor_at_1(embed(q(2), 3), 2) == [1, 2, 1]
    with pytest.raises(ValueError):
        taylor_at_1(one(3), 3)


def test_laurent_membership():
    element = embed(q(1), 2)

    assert laurent_membership(element, q(1) + poch(2))
    assert not laurent_membership(element, LaurentV.one())
    assert not laurent_membership(element, LaurentV.v(1))
    assert str(one(2)) == "1 mod (q;q)_2"
