"""
Homogeneous foliation service: cone tangent, inflection form, type, Camacho-Sad polynomial, flatness criteria
"""

import logging
from math import comb
from typing import Dict, List, Tuple

from models.field import FieldElem
from models.foliation import XY, AffineOneForm
from models.homogeneous import HomFoliation, HomType
from models.polynomial import MPoly, VarSet
from services.elimination import gcd, resultant, squarefree_decomposition, squarefree_part
from services.errors import (
    DegenerateInfinity, FiberConditionFailed, IncompleteFactorization, NonDivisible,
    NotHomogeneous, NotMaximalInflection, NotSimpleInflection, WebflatError,
)
from services.root_finding import binary_form_roots

logger = logging.getLogger(__name__)

LAM = VarSet(("lam",))
_XL = VarSet(("x", "lam"))


def _x() -> MPoly:
    return MPoly.var(XY, "x")


def _y() -> MPoly:
    return MPoly.var(XY, "y")


def _line_coefficients(line: MPoly) -> Tuple[FieldElem, FieldElem]:
    line = line.change_ring(XY)
    if line.total_degree() != 1 or not line.is_homogeneous():
        raise WebflatError(f"{line} is not a line through the origin")
    return line.coefficient((1, 0)), line.coefficient((0, 1))


class HomogeneousService:
    def from_form(self, form: AffineOneForm) -> HomFoliation:
        """Recognise a homogeneous affine 1-form; A and B must be coprime binary forms"""
        if form.parameters:
            raise NotHomogeneous(f"symbolic parameters {form.parameters} are not allowed here")
        A, B = form.P.change_ring(XY), form.Q.change_ring(XY)
        if not (A.is_homogeneous() and B.is_homogeneous()):
            raise NotHomogeneous(f"{form} is not homogeneous")
        if A.is_zero() or B.is_zero() or A.total_degree() != B.total_degree():
            raise NotHomogeneous("A and B must be nonzero binary forms of one degree")
        if not gcd(A, B).is_constant():
            raise NotHomogeneous("A and B share a factor, the form is not saturated")
        return HomFoliation(A, B)

    def cone_tangent(self, H: HomFoliation) -> MPoly:
        return _x() * H.A + _y() * H.B

    def d_transverse(self, H: HomFoliation) -> MPoly:
        A, B = H.A, H.B
        return A.derivative("x") * B.derivative("y") - A.derivative("y") * B.derivative("x")

    def hom_type(self, H: HomFoliation) -> HomType:
        """Multiplicity classes of D_H split into fixed (radial) and non-fixed (transverse) directions"""
        cone = self.cone_tangent(H)
        inflection = self.d_transverse(H)
        radial: Dict[int, int] = {}
        transverse: Dict[int, int] = {}
        for k, factor in squarefree_decomposition(inflection):
            total = factor.total_degree()
            fixed = gcd(factor, cone).total_degree()
            if fixed:
                radial[k] = fixed
            if total - fixed:
                transverse[k] = total - fixed
        return HomType(radial, transverse)

    def cs_polynomial(self, H: HomFoliation) -> MPoly:
        """prod (lam - CS(H, L_inf, s)) over the singular points s on the line at infinity"""
        cone = self.cone_tangent(H)
        if squarefree_part(cone).total_degree() != cone.total_degree():
            raise DegenerateInfinity("the cone tangent has a multiple factor")
        lam = MPoly.var(LAM, "lam")
        c = cone.evaluate({"y": 1}).change_ring(_XL)
        a = H.A.evaluate({"y": 1}).change_ring(_XL)
        result = MPoly.one(LAM)
        if c.degree("x") > 0:
            eliminant = resultant(c, MPoly.var(_XL, "lam") * c.derivative("x") - a, "x")
            result = eliminant.change_ring(LAM).monic()
        if cone.total_degree() > c.degree("x"):
            # [1:0:0] read in the chart with x and y swapped
            swapped = cone.evaluate({"x": 1})
            value = H.B.value_at({"x": 1, "y": 0}) / swapped.derivative("y").value_at({"x": 1, "y": 0})
            result = result * (lam - value)
        return result.monic()

    def camacho_sad_values(self, H: HomFoliation) -> List[Tuple[MPoly, FieldElem]]:
        """(direction factor of C_H, CS on the line at infinity) for every direction over the field"""
        cone = self.cone_tangent(H)
        directions, _ = binary_form_roots(cone, "x", "y")
        values = []
        for (a, b), _ in directions:
            if b.is_zero():
                swapped = cone.evaluate({"x": 1})
                value = H.B.value_at({"x": 1, "y": 0}) / swapped.derivative("y").value_at({"x": 1, "y": 0})
            else:
                x0 = a / b
                c = cone.evaluate({"y": 1})
                value = H.A.value_at({"x": x0, "y": 1}) / c.derivative("x").value_at({"x": x0, "y": 1})
            values.append(((_x() * b - _y() * a).monic(), value))
        return values

    # Flatness criteria

    def barycentre_Q(self, H: HomFoliation, line: MPoly) -> FieldElem:
        """Q(b,-a;a,b) for a simple transverse inflection line a*x + b*y; zero iff the curvature is holomorphic there"""
        a, b = _line_coefficients(line)
        T = _x() * a + _y() * b
        cone, inflection = self.cone_tangent(H), self.d_transverse(H)
        if not T.divides(inflection) or (T * T).divides(inflection) or T.divides(cone):
            raise NotSimpleInflection(f"{T} is not a simple transverse inflection line")
        alpha = H.A.value_at({"x": b, "y": -a})
        beta = H.B.value_at({"x": b, "y": -a})
        fiber = H.A * beta - H.B * alpha
        if gcd(fiber, inflection) != T.monic():
            raise FiberConditionFailed(f"another critical point shares the fiber of {T}")
        try:
            P = fiber.exact_div(T * T)
        except NonDivisible:
            raise NonDivisible(f"{T}^2 does not divide the fiber form") from None
        Q = P.derivative("x") * beta - P.derivative("y") * alpha
        return Q.value_at({"x": b, "y": -a})

    def divergence_test(self, H: HomFoliation, line: MPoly) -> bool:
        """For a transverse inflection line of maximal order d-1: does d(omega) vanish on it"""
        a, b = _line_coefficients(line)
        T = _x() * a + _y() * b
        cone, inflection = self.cone_tangent(H), self.d_transverse(H)
        order = H.degree - 1
        if T.divides(cone) or not (T ** order).divides(inflection) or (T ** (order + 1)).divides(inflection):
            raise NotMaximalInflection(f"{T} is not a transverse inflection line of order {order}")
        divergence = H.B.derivative("x") - H.A.derivative("y")
        return T.divides(divergence)

    def _transverse_lines(self, H: HomFoliation) -> List[Tuple[MPoly, int]]:
        cone, inflection = self.cone_tangent(H), self.d_transverse(H)
        directions, residual = binary_form_roots(inflection, "x", "y")
        if not residual.is_constant() and not squarefree_part(residual).divides(cone):
            raise IncompleteFactorization("an inflection direction does not split over the field")
        lines = []
        for (a, b), multiplicity in directions:
            T = (_x() * b - _y() * a).monic()
            if not T.divides(cone):
                lines.append((T, multiplicity))
        return lines

    def flat_homog3(self, H: HomFoliation) -> bool:
        """Degree three flatness: simple lines map to invariant lines, double lines kill d(omega)"""
        if H.degree != 3:
            raise WebflatError("flat_homog3 needs a degree three foliation")
        if self.hom_type(H).convex:
            return True
        cone = self.cone_tangent(H)
        for T, multiplicity in self._transverse_lines(H):
            a, b = _line_coefficients(T)
            if multiplicity == 1:
                image = _x() * H.A.value_at({"x": b, "y": -a}) + _y() * H.B.value_at({"x": b, "y": -a})
                if not image.divides(cone):
                    return False
            elif not self.divergence_test(H, T):
                return False
        return True

    def flat_by_criteria(self, H: HomFoliation) -> bool:
        """Flatness decided line by line: Barycentre on simple lines, Divergence on maximal ones"""
        if self.hom_type(H).convex:
            return True
        for T, multiplicity in self._transverse_lines(H):
            if multiplicity == 1:
                if not self.barycentre_Q(H, T).is_zero():
                    return False
            elif multiplicity == H.degree - 1:
                if not self.divergence_test(H, T):
                    return False
            else:
                raise NotMaximalInflection(f"no criterion covers a transverse line of order {multiplicity}")
        return True


# The general degree flat families

def _binomial_sum(d: int, start: int, stop: int) -> MPoly:
    x, y = _x(), _y()
    return sum((x ** (d - i) * y ** i * comb(d, i) for i in range(start, stop + 1)), MPoly.zero(XY))


def omega1(d: int) -> AffineOneForm:
    x, y = _x(), _y()
    return AffineOneForm(y ** d, -(x ** d))


def omega2(d: int) -> AffineOneForm:
    x, y = _x(), _y()
    return AffineOneForm(x ** d, -(y ** d))


def omega3(d: int, nu: int) -> AffineOneForm:
    if not 1 <= nu <= d - 2:
        raise WebflatError(f"nu must lie between 1 and {d - 2}")
    return AffineOneForm(_binomial_sum(d, nu + 1, d), -_binomial_sum(d, 0, nu))


def omega4(d: int, nu: int) -> AffineOneForm:
    if not 1 <= nu <= d - 2:
        raise WebflatError(f"nu must lie between 1 and {d - 2}")
    return AffineOneForm(_binomial_sum(d, nu + 1, d) * (d - nu - 1), _binomial_sum(d, 0, nu) * nu)


def omega5(d: int) -> AffineOneForm:
    x, y = _x(), _y()
    return AffineOneForm(y ** d * 2, x ** (d - 1) * (y * d - x * (d - 1)))


def omega6(d: int) -> AffineOneForm:
    x, y = _x(), _y()
    A = x ** d * (d - 1) ** 2 - x ** (d - 1) * y * (d * (d - 1)) + y ** d * (d + 1)
    return AffineOneForm(A, x ** (d - 1) * (y * d - x * (d - 1)))


def families(d: int) -> Dict[str, AffineOneForm]:
    """Every flat family member of degree d, keyed like 'omega4_d5_nu2'"""
    members = {
        f"omega1_d{d}": omega1(d),
        f"omega2_d{d}": omega2(d),
        f"omega5_d{d}": omega5(d),
        f"omega6_d{d}": omega6(d),
    }
    for nu in range(1, d - 1):
        members[f"omega3_d{d}_nu{nu}"] = omega3(d, nu)
        members[f"omega4_d{d}_nu{nu}"] = omega4(d, nu)
    return members
