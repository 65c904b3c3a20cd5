"""The commutator-sign relation as a preorder on nonzero rationals."""

from fractions import Fraction

import pytest

from conftest import signed_grid
from floorcomm.preorder import audit_transitivity, equivalence_classes, equivalent, precedes


def test_precedes_examples():
    assert precedes(Fraction(-2, 3), Fraction(5))
    assert precedes(Fraction(1, 4), Fraction(1, 6))
    assert not precedes(Fraction(3), Fraction(2))


def test_precedes_rejects_zero():
    with pytest.raises(ValueError):
        precedes(Fraction(0), Fraction(1))
    with pytest.raises(ValueError):
        precedes(Fraction(1), Fraction(0))


def test_equivalent_examples():
    assert equivalent(Fraction(1, 3), Fraction(1, 5))
    assert equivalent(Fraction(-7, 4), Fraction(-7, 4))
    assert not equivalent(Fraction(1, 2), Fraction(2))


def test_reflexive_on_grid():
    for value in signed_grid(5, 5):
        assert precedes(value, value)


def test_divisibility_restriction():
    for a in range(1, 13):
        for b in range(1, 13):
            assert precedes(Fraction(a), Fraction(b)) == (b % a == 0)


def test_audit_small_grids():
    assert audit_transitivity([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]) is None
    assert audit_transitivity([Fraction(-1), Fraction(1), Fraction(-2)]) is None
    assert audit_transitivity(signed_grid(4, 4)) is None


def test_negative_values_form_partial_order():
    negatives = [-v for v in signed_grid(5, 5) if v > 0]
    for a in negatives:
        for b in negatives:
            if a != b:
                assert not (precedes(a, b) and precedes(b, a)), (a, b)


def test_equivalence_classes_canonical_reps():
    grid = [
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 3),
        Fraction(2),
        Fraction(3),
        Fraction(-1),
        Fraction(-2),
    ]
    classes = equivalence_classes(grid)
    assert [Fraction(1), Fraction(1, 2), Fraction(1, 3)] in classes
    # the unit-fraction class is the only one with several elements here
    assert sorted(len(cls) for cls in classes) == [1, 1, 1, 1, 3]
    for cls in classes:
        rep = cls[0]
        assert rep == min(cls, key=lambda v: (v.denominator, v.numerator))
