"""
gcd, resultants, discriminants, squarefree decomposition and determinants against a sympy oracle
"""

import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from models.polynomial import MPoly, VarSet
from services.elimination import (
    bareiss_determinant, content, discriminant, gcd, is_coprime, minor_expansion_determinant,
    proportional, resultant, squarefree_decomposition, squarefree_part, sylvester_matrix,
)
from services.errors import ZeroPolynomial
from tests.helpers import poly, to_sympy

XY = VarSet(("x", "y"))
X = sympy.Symbol("x")

small = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-3, 3), min_size=1, max_size=4,
).map(lambda terms: MPoly(XY, terms))


@settings(max_examples=100, deadline=None)
@given(small, small, small)
def test_gcd_divides_and_matches_sympy(f, g, h):
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    a, b = f * h, g * h
    common = gcd(a, b)
    assert common.divides(a) and common.divides(b)
    assert h.monic().divides(common) or h.is_constant()
    oracle = sympy.gcd(to_sympy(a), to_sympy(b))
    assert sympy.simplify(to_sympy(common) / oracle).is_number


@settings(max_examples=200, deadline=None)
@given(small, small)
def test_resultant_vanishes_exactly_on_common_factors(f, g):
    if f.is_zero() or g.is_zero() or f.degree("x") <= 0 or g.degree("x") <= 0:
        return
    res = resultant(f, g, "x")
    assert res.is_zero() == (gcd(f, g).degree("x") > 0)


@settings(max_examples=100, deadline=None)
@given(small, small, small)
def test_resultant_is_multiplicative(f, g, h):
    if any(p.is_zero() or p.degree("x") <= 0 for p in (f, g, h)):
        return
    assert resultant(f * g, h, "x") == resultant(f, h, "x") * resultant(g, h, "x")


@pytest.mark.parametrize("f, g", [
    ("x^2*y - 3*x + y^2", "2*x^3 + x*y - 1"),
    ("x^3 - y", "x^2 + y*x + 1"),
    ("(x - y)^2*(x + 1)", "x^2 - y^2 + 3"),
])
def test_resultant_matches_sympy(f, g):
    ours = resultant(poly(f), poly(g), "x")
    assert sympy.expand(to_sympy(ours) - sympy.resultant(to_sympy(poly(f)), to_sympy(poly(g)), X)) == 0


def test_resultant_degree_zero_cases():
    f, c = poly("x^2 + y"), poly("y + 1")
    assert resultant(f, c, "x") == c ** 2
    assert resultant(c, f, "x") == c ** 2
    with pytest.raises(ZeroPolynomial):
        resultant(c, c, "x")


def test_sylvester_matrix_shape():
    matrix = sylvester_matrix(poly("x^2 + 1"), poly("x^3 - x"), "x")
    assert len(matrix) == 5 and all(len(row) == 5 for row in matrix)


def test_cubic_discriminant():
    ring = ("p", "q", "w")
    web = poly("q*w^3 + w + 1", ring)
    # -4*q*1 - 27*q^2 for q*w^3 + 0*w^2 + 1*w + 1
    assert discriminant(web, "w") == poly("-4*q - 27*q^2", ring)
    assert discriminant(poly("x^2 - 2*x*y + y^2"), "x").is_zero()


def test_squarefree_decomposition_of_binary_forms():
    f = poly("x^2*y^3*(x - y)") * poly("x + 2*y") ** 2
    classes = dict(squarefree_decomposition(f))
    assert classes[1] == poly("x - y")
    assert classes[2] == poly("x^2 + 2*x*y")
    assert classes[3] == poly("y")
    assert squarefree_part(f) == poly("x*y*(x - y)*(x + 2*y)")


def test_squarefree_decomposition_univariate():
    f = poly("(x - 1)^3*(x + 2)^2*x", ("x",))
    assert dict(squarefree_decomposition(f)) == {
        1: poly("x", ("x",)),
        2: poly("x + 2", ("x",)),
        3: poly("x - 1", ("x",)),
    }


def test_content_and_coprimality():
    f = poly("(y^2 + 1)*x^2 + (y^2 + 1)*(y - 3)")
    assert proportional(content(f, "x"), poly("y^2 + 1"))
    assert is_coprime(poly("x + y"), poly("x - y"))
    assert not is_coprime(poly("x^2 - y^2"), poly("x - y"))


def test_proportional():
    assert proportional(poly("2*x - 4*y"), poly("-x + 2*y"))
    assert not proportional(poly("x - y"), poly("x + y"))
    assert proportional(MPoly.zero(XY), MPoly.zero(XY))


def test_determinants_agree():
    rng = random.Random(7)
    for _ in range(15):
        size = rng.randint(2, 5)
        rows = [[poly(f"{rng.randint(-3, 3)}*x + {rng.randint(-3, 3)}*y + {rng.randint(-2, 2)}")
                 for _ in range(size)] for _ in range(size)]
        bareiss = bareiss_determinant(rows)
        assert bareiss == minor_expansion_determinant(rows)
        oracle = sympy.Matrix([[to_sympy(e) for e in row] for row in rows]).det()
        assert sympy.expand(to_sympy(bareiss) - oracle) == 0
