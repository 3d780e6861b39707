"""
Arithmetic in Q(i, sqrt3)
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from models.field import FieldElem, I, ONE, SQRT3, ZERO
from services.errors import DivisionByZero

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elements = st.builds(FieldElem, rationals, rationals, rationals, rationals)


@settings(max_examples=1000, deadline=None)
@given(elements, elements, elements)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=1000, deadline=None)
@given(elements)
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(DivisionByZero):
            a.inverse()
    else:
        assert a * a.inverse() == ONE
        assert a.norm() != 0


@settings(max_examples=250, deadline=None)
@given(elements)
def test_square_roots_of_squares(a):
    root = (a * a).sqrt()
    assert root is not None
    assert root * root == a * a


def test_generators():
    assert I * I == -1
    assert SQRT3 * SQRT3 == 3
    assert (I * SQRT3) ** 2 == -3


def test_sqrt_inside_and_outside_the_field():
    assert FieldElem(-3).sqrt() ** 2 == -3
    assert FieldElem(4).sqrt() ** 2 == 4
    assert FieldElem(2).sqrt() is None
    assert FieldElem(2, 0, 1).sqrt() is None
    assert FieldElem(4, 0, 2).sqrt() ** 2 == FieldElem(4, 0, 2)


def test_division_by_zero_is_a_zero_division_error():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_conjugates_and_norm():
    a = FieldElem(1, 2, 3, 4)
    assert a.conjugate_i().conjugate_i() == a
    assert isinstance(a.norm(), Fraction)
    assert (a * a.conjugate_i() * a.conjugate_sqrt3() * a.conjugate_both()).is_rational()


def test_printing():
    assert str(FieldElem(Fraction(1, 2), -1, 0, 3)) == "1/2 - i + 3*i*sqrt3"
    assert str(ZERO) == "0"
    assert str(-SQRT3) == "-sqrt3"


def test_equality_with_python_numbers():
    assert FieldElem(Fraction(3, 4)) == Fraction(3, 4)
    assert FieldElem(2) == 2
    assert hash(FieldElem(2)) == hash(2)
