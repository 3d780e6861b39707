"""
Legendre transform of a foliation in the three dual charts
"""

import logging
from typing import Dict, Union

from models.foliation import AffineOneForm, Foliation
from models.polynomial import MPoly, VarSet
from models.web import Chart, ImplicitWeb
from services.elimination import content
from services.errors import DegreeDrop, DegreeZero, WebflatError

logger = logging.getLogger(__name__)

_FIBER = {Chart.DUAL1: "x", Chart.DUAL2: "w", Chart.DUAL3: "w"}


class LegendreService:
    def legendre(self, foliation: Foliation, chart: Union[Chart, int, str] = Chart.DUAL1) -> ImplicitWeb:
        if foliation.degree < 1:
            raise DegreeZero("the Legendre transform of a degree 0 foliation is empty")
        return self.legendre_affine(foliation.affine(), chart)

    def foliation_degree(self, form: AffineOneForm) -> int:
        """d = n - 1 when the top homogeneous part is radial, otherwise n"""
        n = form.affine_degree()
        x, y = MPoly.var(form.ring, "x"), MPoly.var(form.ring, "y")
        P_top = form.P.homogeneous_components(("x", "y")).get(n, MPoly.zero(form.ring))
        Q_top = form.Q.homogeneous_components(("x", "y")).get(n, MPoly.zero(form.ring))
        return n - 1 if (x * P_top + y * Q_top).is_zero() else n

    def legendre_affine(self, form: AffineOneForm, chart: Union[Chart, int, str] = Chart.DUAL1) -> ImplicitWeb:
        """Legendre web of P dx + Q dy, parameters allowed; only the content in the fiber variable is removed"""
        chart = Chart.parse(chart)
        if chart == Chart.AFFINE:
            raise WebflatError("the Legendre transform lives in a dual chart (1, 2 or 3)")
        d = self.foliation_degree(form)
        if d < 1:
            raise DegreeZero("the Legendre transform of a degree 0 foliation is empty")
        fiber = _FIBER[chart]
        ring = VarSet(("p", "q", fiber) + form.parameters)
        P, Q = form.P.change_ring(ring.extend(("x", "y"))), form.Q.change_ring(ring.extend(("x", "y")))
        if chart == Chart.DUAL1:
            F = self._dual1(P, Q, ring)
        else:
            F = self._dual23(P, Q, ring, chart, form.affine_degree(), d)
        if F.is_zero() or F.degree(fiber) < d:
            raise DegreeDrop(f"the fiber degree drops below {d} in chart {chart.value}", chart=chart.value)
        common = content(F, fiber)
        if not common.is_constant():
            F = F.exact_div(common)
        logger.info(f"✅ Legendre transform in {chart.value}: {d}-web")
        return ImplicitWeb(F, ("p", "q"), fiber, chart)

    @staticmethod
    def _dual1(P: MPoly, Q: MPoly, ring: VarSet) -> MPoly:
        """F(p, q, x) = P(x, px - q) + p Q(x, px - q)"""
        p, q, x = (MPoly.var(ring, n) for n in ("p", "q", "x"))
        image: Dict[str, MPoly] = {"x": x, "y": p * x - q}
        P_line, Q_line = P.substitute(image, ring=ring), Q.substitute(image, ring=ring)
        return P_line + p * Q_line

    @staticmethod
    def _dual23(P: MPoly, Q: MPoly, ring: VarSet, chart: Chart, top: int, d: int) -> MPoly:
        """Denominators cleared along (x, y) = (w, 1)/(pw - q) or (1, w)/(pw - q)"""
        p, q, w = (MPoly.var(ring, name) for name in ("p", "q", "w"))
        one = MPoly.one(ring)
        point = {"x": w, "y": one} if chart == Chart.DUAL2 else {"x": one, "y": w}
        weights = (q, p) if chart == Chart.DUAL2 else (p, q)
        D = p * w - q
        P_parts = P.homogeneous_components(("x", "y"))
        Q_parts = Q.homogeneous_components(("x", "y"))
        total = MPoly.zero(ring)
        for k in range(top + 1):
            P_k = P_parts[k].substitute(point, ring=ring) if k in P_parts else MPoly.zero(ring)
            Q_k = Q_parts[k].substitute(point, ring=ring) if k in Q_parts else MPoly.zero(ring)
            term = weights[0] * P_k + weights[1] * Q_k
            if not term.is_zero():
                total = total + D ** (top - k) * term
        return total.exact_div(D ** (top - d)) if top > d else total
