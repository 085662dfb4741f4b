import math
from fractions import Fraction

import pytest

from stardecomp.exactnum import RootBound, Surd


def test_perfect_square_folds_into_rational():
    s = Surd.of(1, 2, 9)
    assert s.b == 0
    assert s == 7


def test_sign_tracking_opposite_signs():
    assert Surd.of(3, -2, 2).sign() == 1  # 3 > 2*sqrt(2)
    assert Surd.of(-3, 2, 2).sign() == -1
    assert Surd.of(2, -1, 4).sign() == 0  # 2 - sqrt(4)
    assert Surd.of(-5, 2, 2).sign() == -1
    assert Surd.of(5, -2, 2).sign() == 1  # 25 > 8


def test_comparisons_against_integers():
    cap = Surd.of(48, -16, 2)  # (6 - 2*sqrt(2)) * 8
    assert cap > 25
    assert cap < 26
    assert not (cap > 26)
    assert float(cap) == pytest.approx(25.372, abs=1e-3)


def test_comparisons_between_surds_same_radicand():
    a = Surd.of(1, 1, 2)
    b = Surd.of(2, Fraction(1, 2), 2)
    assert a < b
    assert b > a
    assert Surd.of(0, 2, 2) == Surd.of(0, 2, 2)


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        Surd.of(0, 1, 2) < Surd.of(0, 1, 3)


def test_negative_radicand_rejected():
    with pytest.raises(ValueError):
        Surd.of(0, 1, -1)


def test_root_bound_exact_threshold():
    # value = sqrt(2): integers 1 and 2 must land on opposite sides
    v = RootBound(Fraction(0), Surd.of(2))
    assert v > 1
    assert v < 2
    assert v.min_integer_above() == 2


def test_root_bound_exact_tie():
    # q + sqrt(X) with X = 0 hits an integer exactly
    v = RootBound(Fraction(3), Surd.of(0))
    assert v.cmp(3) == 0
    assert not (v > 3)
    assert not (v < 3)
    assert v.min_integer_above() == 4


def test_root_bound_nested_radical():
    # sqrt(10006.25 - 200*sqrt(6)) - 96.5 is just above 1
    v = RootBound(
        Fraction(-193, 2), Surd.of(Fraction(40025, 4), -200, 6)
    )
    assert v > 1
    assert v < 2
    assert float(v) == pytest.approx(
        -96.5 + math.sqrt(10006.25 - 200 * math.sqrt(6)), abs=1e-9
    )


def test_root_bound_rejects_negative_radicand():
    with pytest.raises(ValueError):
        RootBound(Fraction(0), Surd.of(-1, 0, 0))
