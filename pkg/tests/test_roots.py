"""
Exact roots in Q(i, sqrt3)
"""

from fractions import Fraction

from models.field import FieldElem, I, SQRT3
from services.root_finding import binary_form_roots, find_field_roots, linear_factor, univariate_gcd_roots
from tests.helpers import poly

X = ("x",)


def roots_of(text: str):
    roots, residual = find_field_roots(poly(text, X))
    return dict(roots), residual


def test_rational_roots_with_multiplicity():
    roots, residual = roots_of("(x - 1)^3*(2*x + 3)*x^2")
    assert roots == {FieldElem(1): 3, FieldElem(Fraction(-3, 2)): 1, FieldElem(0): 2}
    assert residual.is_constant()


def test_quadratic_irrationalities():
    roots, residual = roots_of("(x^2 + 1)*(x^2 - 3)*(x^2 + 3)")
    assert set(roots) == {I, -I, SQRT3, -SQRT3, I * SQRT3, -I * SQRT3}
    assert residual.is_constant()


def test_cone_of_eleventh_fixture():
    # roots +-i, -1/sqrt3 and -sqrt3
    roots, residual = roots_of("(x^2 + 1)*(3*x + sqrt3)*(x + sqrt3)")
    assert set(roots) == {I, -I, -SQRT3 / 3, -SQRT3}
    assert residual.is_constant()


def test_roots_outside_the_field_stay_in_the_residual():
    roots, residual = roots_of("(x^2 - 2)*(x - 5)")
    assert roots == {FieldElem(5): 1}
    assert residual.degree("x") == 2


def test_primitive_twelfth_roots_of_unity():
    roots, residual = roots_of("x^4 - x^2 + 1")
    assert len(roots) == 4
    for root in roots:
        assert root ** 12 == 1 and root ** 6 != 1
    assert residual.is_constant()


def test_binary_form_roots_include_infinity():
    points, residual = binary_form_roots(poly("x^2*y*(x - 2*y)"), "x", "y")
    found = dict(points)
    assert found[(FieldElem(0), FieldElem(1))] == 2
    assert found[(FieldElem(2), FieldElem(1))] == 1
    assert found[(FieldElem(1), FieldElem(0))] == 1
    assert residual.is_constant()
    assert linear_factor((FieldElem(2), FieldElem(1)), poly("x").ring, "x", "y") == poly("x - 2*y")


def test_common_roots():
    roots, _ = univariate_gcd_roots(poly("(x - 1)*(x + 2)", X), poly("(x + 2)*(x - 7)", X))
    assert roots == [(FieldElem(-2), 1)]
