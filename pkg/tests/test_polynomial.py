"""
Sparse multivariate polynomials
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from models.field import FieldElem, I, SQRT3
from models.polynomial import MPoly, VarSet
from schemas.reports import FieldElemPayload, PolynomialPayload
from services import compute_guard
from services.errors import (
    FormSyntaxError, NonDivisible, RingMismatch, TermBudgetExceeded, UnknownVariable, ZeroPolynomial,
)
from tests.helpers import poly, to_sympy

XY = VarSet(("x", "y"))

coefficients = st.integers(min_value=-3, max_value=3)
exponents = st.tuples(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
polynomials = st.dictionaries(exponents, coefficients, max_size=5).map(lambda terms: MPoly(XY, terms))
linear_maps = st.dictionaries(
    st.sampled_from([(1, 0), (0, 1), (0, 0)]), coefficients, max_size=3,
).map(lambda terms: MPoly(XY, terms))


@settings(max_examples=200, deadline=None)
@given(polynomials, polynomials, polynomials)
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@settings(max_examples=200, deadline=None)
@given(polynomials, polynomials)
def test_exact_division_recovers_the_factor(f, g):
    if g.is_zero():
        return
    assert (f * g).exact_div(g) == f
    assert g.divides(f * g)


@settings(max_examples=100, deadline=None)
@given(polynomials, polynomials)
def test_products_agree_with_sympy(f, g):
    assert to_sympy(f * g) == to_sympy(f) * to_sympy(g) or (to_sympy(f * g) - (to_sympy(f) * to_sympy(g)).expand()) == 0


def test_constructors_and_inspection():
    x, y = MPoly.var(XY, "x"), MPoly.var(XY, "y")
    f = x ** 3 * y - x * 2 + 5
    assert f.total_degree() == 4
    assert f.degree("x") == 3
    assert f.min_degree("y") == 0
    assert f.constant_term() == 5
    assert f.leading_term() == ((3, 1), FieldElem(1))
    assert f.coefficient((1, 0)) == -2
    assert MPoly.monomial(XY, {"x": 2}, 3) == x ** 2 * 3
    assert MPoly.zero(XY).is_zero()
    assert MPoly.one(XY) == 1


def test_coefficients_in_a_variable():
    f = poly("x^2*y + 3*x*y^2 - y + 7")
    parts = f.coefficients_in("x")
    assert parts[2] == poly("y")
    assert parts[1] == poly("3*y^2")
    assert parts[0] == poly("7 - y")
    assert f.leading_coefficient_in("x") == poly("y")
    assert f.coefficient_of({"x": 1}) == poly("3*y^2")
    assert MPoly.from_coefficients(XY, "x", parts) == f


def test_homogeneous_components():
    f = poly("x^3 - x*y + y + 2")
    parts = f.homogeneous_components()
    assert set(parts) == {0, 1, 2, 3}
    assert parts[2] == poly("-x*y")
    assert not f.is_homogeneous()
    assert poly("x^2 - 3*x*y").is_homogeneous()


def test_homogenize():
    f = poly("x^2 + y + 1", ("x", "y", "z"))
    assert f.homogenize("z", over=("x", "y")) == poly("x^2 + y*z + z^2", ("x", "y", "z"))
    assert f.homogenize("z", 3, over=("x", "y")) == poly("x^2*z + y*z^2 + z^3", ("x", "y", "z"))
    with pytest.raises(ValueError):
        f.homogenize("z", 1, over=("x", "y"))


def test_exact_division_failures():
    with pytest.raises(NonDivisible):
        poly("x^2 + 1").exact_div(poly("x + 1"))
    with pytest.raises(ZeroPolynomial):
        poly("x").exact_div(MPoly.zero(XY))
    assert poly("x^2 - y^2").exact_div(poly("x - y")) == poly("x + y")


def test_calculus_and_substitution():
    f = poly("x^3*y - 2*x*y^2")
    assert f.derivative("x") == poly("3*x^2*y - 2*y^2")
    assert f.evaluate({"y": 1}) == poly("x^3 - 2*x")
    assert f.value_at({"x": 2, "y": -1}) == -12
    uv = VarSet(("u", "v"))
    moved = f.substitute({"x": MPoly.var(uv, "u") + 1, "y": MPoly.var(uv, "v")})
    assert moved.ring == uv
    assert moved.value_at({"u": 1, "v": -1}) == f.value_at({"x": 2, "y": -1})


def test_field_coefficients():
    f = poly("(1 + i)*x - sqrt3*y")
    assert f.coefficient((1, 0)) == FieldElem(1, 1)
    assert f.coefficient((0, 1)) == -SQRT3
    assert (f * I).coefficient((1, 0)) == FieldElem(-1, 1)
    assert f.monic().leading_coefficient() == 1


def test_ring_discipline():
    with pytest.raises(RingMismatch):
        poly("x") + poly("p", ("p", "q"))
    with pytest.raises(UnknownVariable):
        poly("x").derivative("w")
    with pytest.raises(UnknownVariable):
        poly("x*y").change_ring(("x",))


def test_printing_round_trips():
    for text in ("x^3*y - 2*x*y^2 + 1/2", "(i)*x^2 + (1 + sqrt3)*y", "-x + 3"):
        f = poly(text)
        assert poly(str(f)) == f


def test_term_budget_is_enforced():
    f = poly("x + y + 1") ** 3
    with compute_guard.limits(max_terms=5):
        with pytest.raises(TermBudgetExceeded):
            f * f


@settings(max_examples=100, deadline=None)
@given(polynomials, linear_maps, linear_maps, linear_maps, linear_maps)
def test_substitution_composes(f, sx, sy, tx, ty):
    sigma = {"x": sx, "y": sy}
    tau = {"x": tx, "y": ty}
    composed = {name: image.substitute(tau) for name, image in sigma.items()}
    assert f.substitute(sigma).substitute(tau) == f.substitute(composed)


@settings(max_examples=100, deadline=None)
@given(polynomials)
def test_json_payload_round_trip(f):
    payload = PolynomialPayload.from_poly(f)
    assert PolynomialPayload.model_validate_json(payload.model_dump_json()).to_poly() == f


def test_json_payload_layout():
    f = poly("1/2*x^2*y - i*sqrt3*y") + FieldElem(0, 1, 0, 3)
    payload = PolynomialPayload.from_poly(f).model_dump()
    assert payload["ring"] == ["x", "y"]
    assert payload["terms"][0] == {"exp": [2, 1], "coeff": {"c0": "1/2", "c1": "0", "c2": "0", "c3": "0"}}
    constant = next(term for term in payload["terms"] if term["exp"] == [0, 0])
    assert constant["coeff"] == {"c0": "0", "c1": "1", "c2": "0", "c3": "3"}
    assert FieldElemPayload(c0="-2/3", c3="5").to_elem() == FieldElem(Fraction(-2, 3), 0, 0, 5)


def test_json_payload_rejects_bad_input():
    with pytest.raises(FormSyntaxError):
        PolynomialPayload(ring=["x", "y"], terms=[{"exp": [1], "coeff": {"c0": "1"}}]).to_poly()
    with pytest.raises(FormSyntaxError):
        PolynomialPayload(ring=["x", "x"], terms=[]).to_poly()
    with pytest.raises(FormSyntaxError):
        FieldElemPayload(c0="1/0").to_elem()
