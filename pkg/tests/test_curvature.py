"""
Curvature of implicit 3-webs
"""

from fractions import Fraction

import pytest

from models.field import I, SQRT3
from models.web import Chart
from services.elimination import proportional
from services.errors import NonReducedWeb, NotACubicWeb, SingularMatrix
from services.parser_service import parse_dual_web, parse_web
from tests.helpers import poly

NILPOTENT_WEB = (
    "(p^2*q + alpha2*p^2 + beta2*p*q + a3*p + b3*q - c3)*w^3"
    " + (-2*p*q^2 + alpha1*p^2 + (beta1-alpha2)*p*q - beta2*q^2 + a2*p + b2*q - c2)*w^2"
    " + (q^3 + alpha0*p^2 + (beta0-alpha1)*p*q - beta1*q^2 + a1*p + b1*q - c1)*w"
    " - alpha0*p*q - beta0*q^2 + a0*p + b0*q - c0"
)
SADDLE_NODE_WEB = (
    "(p^3 + beta0*p^2 + b0*p + alpha0*p*q + a0*q + c0)*w^3"
    " + (-2*p^2*q + b1*p - alpha0*q^2 - beta0*p*q + a1*q + c1)*w^2"
    " + (p*q^2 + beta2*p^2 + b2*p + alpha2*p*q + a2*q + c2)*w"
    " + b3*p - alpha2*q^2 - beta2*p*q + a3*q + c3"
)


def _curvature_is(K, web, numerator, denominator):
    """K equals numerator/denominator up to a nonzero constant"""
    names = web.F.ring.names
    return proportional(K.numerator * poly(denominator, names), K.denominator * poly(numerator, names))


def test_cauchy_web_is_flat(curvature):
    web = parse_web("p^3+4*x*y*p-8*y^2")
    K = curvature.curvature(web)
    assert K.flat
    assert K.reduced_numerator.is_zero()
    assert curvature.is_flat(web)


def test_parallel_web_is_flat(curvature):
    assert curvature.is_flat(parse_web("p*(p-1)*(p+1)"))


def test_curvature_with_a_cusp(curvature):
    web = parse_web("p^3-4*y*p-4*x")
    K = curvature.curvature(web)
    assert not K.flat
    assert _curvature_is(K, web, "x*(54*x^2 - 27*y + 36*y^2 + 64*y^3)", "(27*x^2 - 16*y^3)^2")
    assert proportional(
        K.reduced_numerator * poly("(27*x^2 - 16*y^3)^2", web.F.ring.names),
        K.reduced_denominator * poly("x*(54*x^2 - 27*y + 36*y^2 + 64*y^3)", web.F.ring.names),
    )
    assert proportional(curvature.p_resultant(web), poly("27*x^2 - 16*y^3", web.F.ring.names))


def test_curvature_with_a_pole_on_an_invariant_line(curvature):
    web = parse_web("p^3+3*y^2*p-2*x*y^3")
    assert proportional(curvature.p_discriminant(web), poly("y^6*(x^2+1)", web.F.ring.names))
    assert _curvature_is(curvature.curvature(web), web, "x", "y*(x^2+1)^2")


def test_determinant_resultant_agrees_with_elimination(curvature):
    for text in ("p^3-4*y*p-4*x", "p^3+3*y^2*p-2*x*y^3", "x*p^3 + y*p^2 - p + x*y"):
        web = parse_web(text)
        assert proportional(curvature.henaut_R(web), curvature.p_resultant(web))


def test_non_reduced_and_non_cubic_webs(curvature):
    with pytest.raises(NonReducedWeb):
        curvature.curvature(parse_web("(p-1)^2*(p-x)"))
    with pytest.raises(NotACubicWeb):
        curvature.curvature(parse_web("p^2 - x"))
    with pytest.raises(NotACubicWeb):
        curvature.henaut_alpha(parse_web("p^4 - x"))


def test_first_order_webs_have_a_trivial_resultant(curvature):
    web = parse_web("p - x")
    assert curvature.p_resultant(web) == 1


def test_parametric_family_is_flat_only_at_zero(curvature):
    web = parse_dual_web("q*w^3 + c*w + 1", chart=Chart.DUAL2)
    K = curvature.curvature(web)
    assert _curvature_is(K, web, "c^2*(2*c^3 + 27*q)", "q^2*(4*c^3 + 27*q)^2")
    assert curvature.is_flat(web.specialize({"c": 0}))
    for value in (1, 2, I, SQRT3):
        assert not curvature.is_flat(web.specialize({"c": value}))


def test_proportional_family(curvature):
    assert curvature.is_flat(parse_dual_web("p*w^3 + 3*p*w^2 + 3*p*w - 1", chart=Chart.DUAL3))
    assert not curvature.is_flat(parse_dual_web("p*w^3 + 3*p*w^2 + 2*p*w - 1", chart=Chart.DUAL3))
    web = parse_dual_web("p*w^3 + a0*p*w - 1", chart=Chart.DUAL3)
    assert _curvature_is(curvature.curvature(web), web, "a0^4*p", "(4*a0^3*p^2 + 27)^2")


def test_coefficients_of_a_flat_web_vanish(curvature):
    web = parse_web("p^3+4*x*y*p-8*y^2")
    assert curvature.curvature_coefficient(web, 1, 1).is_zero()
    assert curvature.curvature_coefficient(web, 0, 0).is_zero()


def test_sampling_is_seeded(curvature):
    web = parse_dual_web(NILPOTENT_WEB)
    first = curvature.sample_parameters(web, {"alpha0": 2})
    second = curvature.sample_parameters(web, {"alpha0": 2})
    assert first == second
    assert first["alpha0"] == 2
    assert set(first) == set(web.parameters)


@pytest.mark.slow
def test_nilpotent_family_coefficient(curvature):
    web = parse_dual_web(NILPOTENT_WEB)
    alphas = (1, 2, 3)
    values = [curvature.curvature_coefficient(web, 17, 6, {"alpha0": a}).constant_value() for a in alphas]
    # normalisation fixed once at alpha0 = 1, where the coefficient is 2*alpha0^5 = 2
    c = values[0] / 2
    assert not c.is_zero()
    for a, value in zip(alphas, values):
        assert value == c * (2 * a ** 5)


@pytest.mark.slow
def test_saddle_node_family_coefficient(curvature):
    web = parse_dual_web(SADDLE_NODE_WEB)
    betas = (1, 2)
    values = [curvature.curvature_coefficient(web, 21, 2, {"alpha2": 1, "beta2": b}).constant_value() for b in betas]
    # normalisation fixed once at beta2 = 1, where the coefficient is -2*beta2^4 = -2
    c = values[0] / -2
    assert not c.is_zero()
    for b, value in zip(betas, values):
        assert value == c * (-2 * b ** 4)


@pytest.mark.parametrize("sigma", [
    [[1, 0, 0], [0, 1, 0]],
    [[2, 1, 3], [0, 1, -1]],
    [[Fraction(1, 2), 0, 1], [1, 3, 0]],
])
def test_flatness_survives_base_changes(curvature, sigma):
    flat = parse_web("p^3+4*x*y*p-8*y^2")
    curved = parse_web("p^3-4*y*p-4*x")
    assert curvature.is_flat(curvature.pullback_base(flat, sigma))
    assert not curvature.is_flat(curvature.pullback_base(curved, sigma))


def test_identity_base_change_keeps_the_web(curvature):
    web = parse_web("p^3-4*y*p-4*x")
    assert curvature.pullback_base(web, [[1, 0, 0], [0, 1, 0]]).F == web.F


def test_singular_base_change(curvature):
    with pytest.raises(SingularMatrix):
        curvature.pullback_base(parse_web("p^3 - x"), [[1, 2, 0], [2, 4, 0]])
