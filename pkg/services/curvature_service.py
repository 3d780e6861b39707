"""
Curvature service: p-resultant, p-discriminant and the exact curvature of implicit 3-webs
"""

import logging
import random
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from config import settings
from models.field import FieldElem
from models.polynomial import MPoly
from models.web import Curvature2Form, ImplicitWeb
from services.elimination import discriminant, gcd, minor_expansion_determinant, resultant
from services.errors import NonReducedWeb, NotACubicWeb, SingularMatrix

logger = logging.getLogger(__name__)

AffineMap = Sequence[Sequence[object]]


class CurvatureService:
    def __init__(self, sampling_threshold: Optional[int] = None, seed: Optional[int] = None):
        self.sampling_threshold = settings.WEBFLAT_SAMPLING_THRESHOLD if sampling_threshold is None else sampling_threshold
        self.seed = settings.WEBFLAT_SAMPLING_SEED if seed is None else seed

    def p_resultant(self, web: ImplicitWeb) -> MPoly:
        """R = Res_w(F, dF/dw)"""
        if web.order < 1:
            return MPoly.one(web.F.ring)
        return resultant(web.F, web.F.derivative(web.fiber), web.fiber)

    def p_discriminant(self, web: ImplicitWeb) -> MPoly:
        return discriminant(web.F, web.fiber)

    # Three determinants of the cubic case

    def _cubic_coefficients(self, web: ImplicitWeb) -> List[MPoly]:
        if web.order != 3:
            raise NotACubicWeb(f"expected a 3-web, got a {web.order}-web")
        return web.coefficients()

    def henaut_R(self, web: ImplicitWeb) -> MPoly:
        a0, a1, a2, a3 = self._cubic_coefficients(web)
        zero = MPoly.zero(web.F.ring)
        matrix = [
            [a0, a1, a2, a3, zero],
            [zero, a0, a1, a2, a3],
            [a0 * 3, a1 * 2, a2, zero, zero],
            [zero, a0 * 3, a1 * 2, a2, zero],
            [zero, zero, a0 * 3, a1 * 2, a2],
        ]
        return minor_expansion_determinant(matrix)

    def henaut_alpha(self, web: ImplicitWeb) -> Tuple[MPoly, MPoly]:
        a0, a1, a2, a3 = self._cubic_coefficients(web)
        u, v = web.base
        zero = MPoly.zero(web.F.ring)
        mixed = [
            a0.derivative(v),
            a0.derivative(u) + a1.derivative(v),
            a1.derivative(u) + a2.derivative(v),
            a2.derivative(u) + a3.derivative(v),
            a3.derivative(u),
        ]
        tail = [
            [-a0, zero, zero],
            [zero, -a0 * 2, zero],
            [a2, -a1, -a0 * 3],
            [a3 * 2, zero, -a1 * 2],
            [zero, a3, -a2],
        ]
        plain = [a0, a1, a2, a3, zero]
        first = [[mixed[i], plain[i]] + tail[i] for i in range(5)]
        second = [[([zero] + plain[:4])[i], mixed[i]] + tail[i] for i in range(5)]
        return minor_expansion_determinant(first), minor_expansion_determinant(second)

    def curvature(self, web: ImplicitWeb, reduce: Optional[bool] = None) -> Curvature2Form:
        """K = (d/dv(alpha1/R) - d/du(alpha2/R)) du^dv over the common denominator R^2"""
        R = self.henaut_R(web)
        if R.is_zero():
            raise NonReducedWeb("the web equation has a multiple factor in the fiber variable")
        alpha1, alpha2 = self.henaut_alpha(web)
        u, v = web.base
        numerator = (
            alpha1.derivative(v) * R - alpha1 * R.derivative(v)
            - alpha2.derivative(u) * R + alpha2 * R.derivative(u)
        )
        denominator = R * R
        if reduce is None:
            reduce = not web.parameters
        reduced_numerator, reduced_denominator = numerator, denominator
        if numerator.is_zero():
            reduced_numerator, reduced_denominator = numerator, MPoly.one(R.ring)
        elif reduce:
            common = gcd(numerator, R)
            reduced_numerator = numerator.exact_div(common)
            reduced_denominator = denominator.exact_div(common)
            again = gcd(reduced_numerator, R)
            if not again.is_constant():
                reduced_numerator = reduced_numerator.exact_div(again)
                reduced_denominator = reduced_denominator.exact_div(again)
            scale = reduced_denominator.leading_coefficient().inverse()
            reduced_numerator, reduced_denominator = reduced_numerator.scale(scale), reduced_denominator.scale(scale)
        logger.info(f"🔍 Curvature of a 3-web: numerator with {len(numerator)} terms")
        return Curvature2Form(numerator, denominator, reduced_numerator, reduced_denominator, web.base)

    def is_flat(self, web: ImplicitWeb) -> bool:
        return self.curvature(web, reduce=False).flat

    # Parameter families

    def sample_parameters(self, web: ImplicitWeb, fixed: Optional[Mapping[str, object]] = None) -> Dict[str, FieldElem]:
        """Seeded small random rationals for every parameter not already fixed"""
        rng = random.Random(self.seed)
        values: Dict[str, FieldElem] = {}
        for name in web.parameters:
            drawn = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            values[name] = FieldElem.coerce(fixed[name]) if fixed and name in fixed else FieldElem.coerce(drawn)
        return values

    def curvature_coefficient(self, web: ImplicitWeb, i: int, j: int,
                              values: Optional[Mapping[str, object]] = None) -> MPoly:
        """Coefficient of u^i v^j in the unreduced numerator, in the parameters left free"""
        bindings = dict(values or {})
        free = [n for n in web.parameters if n not in bindings]
        if len(free) > self.sampling_threshold:
            bindings = self.sample_parameters(web, bindings)
            logger.info(f"🔄 Sampling {len(free)} parameters with seed {self.seed}")
        target = web.specialize(bindings) if bindings else web
        numerator = self.curvature(target, reduce=False).numerator
        u, v = web.base
        return numerator.coefficient_of({u: i, v: j})

    # Changes of coordinates on the base

    def pullback_base(self, web: ImplicitWeb, sigma: AffineMap) -> ImplicitWeb:
        """Web in new coordinates (u', v') with (u, v) = M (u', v') + b; slopes move by the induced Moebius map"""
        (m11, m12, b1), (m21, m22, b2) = [[FieldElem.coerce(c) for c in row] for row in sigma]
        if (m11 * m22 - m12 * m21).is_zero():
            raise SingularMatrix("the base change is not invertible")
        ring = web.F.ring
        u, v = web.base
        U, V, w = MPoly.var(ring, u), MPoly.var(ring, v), MPoly.var(ring, web.fiber)
        moved = {u: U * m11 + V * m12 + b1, v: U * m21 + V * m22 + b2}
        numerator_slope = w * m22 + m21
        denominator_slope = w * m12 + m11
        k = web.order
        total = MPoly.zero(ring)
        for index, coeff in enumerate(web.coefficients()):
            if coeff.is_zero():
                continue
            power = k - index
            total = total + coeff.substitute(moved) * numerator_slope ** power * denominator_slope ** (k - power)
        return ImplicitWeb(total, web.base, web.fiber, web.chart)
