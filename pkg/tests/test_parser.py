"""
Parsing 1-forms, webs and polynomials
"""

import pytest

from models.field import FieldElem, I, SQRT3
from models.web import Chart
from services.errors import FormSyntaxError, NonLinearDifferential, UnknownVariable
from services.parser_service import (
    format_form, parse_dual_web, parse_matrix, parse_oneform, parse_polynomial, parse_rational,
    parse_scalar, parse_web, tokenize,
)
from tests.helpers import poly


def test_homogeneous_form():
    form = parse_oneform("y^3*dx - x^3*dy")
    assert form.P == poly("y^3")
    assert form.Q == poly("-x^3")
    assert form.parameters == ()


def test_distribution_over_differentials():
    form = parse_oneform("y^2*(y*dx+2*x*dy)+x^3*(x*dy-y*dx)")
    assert form.P == poly("y^3 - x^3*y")
    assert form.Q == poly("2*x*y^2 + x^4")


def test_field_constants():
    form = parse_oneform("(-3+i*sqrt3)*x*y^2*dx")
    assert form.P.coefficient((1, 2)) == FieldElem(-3, 0, 0, 1)
    assert form.Q.is_zero()


def test_parameters_follow_x_and_y():
    form = parse_oneform("x^3*dx + y^2*(c*x+y)*(x*dy - y*dx)")
    assert form.ring.names == ("x", "y", "c")
    assert form.parameters == ("c",)


def test_unicode_minus_and_implicit_products():
    form = parse_oneform("2x y dx − x^2 dy")
    assert form.P == poly("2*x*y")
    assert form.Q == poly("-x^2")


def test_nonlinear_differentials_are_rejected():
    with pytest.raises(NonLinearDifferential):
        parse_oneform("x*dx*dy")
    with pytest.raises(NonLinearDifferential):
        parse_oneform("dx^2 + dy")


def test_syntax_errors_carry_positions():
    with pytest.raises(FormSyntaxError) as excinfo:
        parse_oneform("x*dx + (y*dy")
    assert excinfo.value.position == len("x*dx + (y*dy")
    with pytest.raises(FormSyntaxError) as excinfo:
        parse_oneform("x*dx $ y*dy")
    assert excinfo.value.position == 5
    assert excinfo.value.exit_code == 2
    with pytest.raises(FormSyntaxError):
        parse_oneform("x^2 + y*dx")
    with pytest.raises(FormSyntaxError):
        parse_polynomial("x/y")


def test_webs():
    cauchy = parse_web("p^3+4*x*y*p-8*y^2")
    assert cauchy.order == 3 and cauchy.fiber == "p" and cauchy.base == ("x", "y")
    assert parse_web("p").order == 1
    dual = parse_dual_web("q*w^3 + w + 1")
    assert dual.chart == Chart.DUAL2
    assert dual.F.ring.names == ("p", "q", "w")
    assert dual.order == 3


def test_polynomials_and_scalars():
    assert parse_polynomial("lam^2 - 1/4", ("lam",)).value_at({"lam": FieldElem(1, 0) / 2}) == 0
    assert parse_scalar("-(1 + i*sqrt3)/2") == FieldElem(-1, 0, 0, -1) / 2
    assert parse_rational("-3/7").numerator == -3
    with pytest.raises(FormSyntaxError):
        parse_rational("sqrt3")
    with pytest.raises(UnknownVariable):
        parse_polynomial("x*z", ("x", "y"))
    assert parse_matrix([["0", "1"], ["i", "sqrt3"]]) == ((FieldElem(0), FieldElem(1)), (I, SQRT3))


def test_canonical_form_round_trip():
    for text in ("y^3*dx - x^3*dy", "(3*x+sqrt3*y)*y^2*dx + (3*y-sqrt3*x)*x^2*dy"):
        form = parse_oneform(text)
        again = parse_oneform(format_form(form))
        assert (again.P, again.Q) == (form.P, form.Q)


def test_tokens():
    kinds = [token.kind for token in tokenize("2*x^3 - sqrt3")]
    assert kinds == ["number", "op", "name", "op", "number", "op", "name", "end"]
