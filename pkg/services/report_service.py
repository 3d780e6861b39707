"""
Report service: the operations shared by the CLI and the HTTP routers
"""

import logging
from typing import Optional, Union

from models.web import Chart, ImplicitWeb
from schemas.reports import (
    AnalyzeResponse, CurvatureResponse, FlatResponse, HomogeneousResponse,
    InflectionResponse, SingularityResponse, WebResponse,
)
from services.curvature_service import CurvatureService
from services.errors import (
    DegenerateInfinity, FiberConditionFailed, IncompleteFactorization, NotMaximalInflection,
    NotSimpleInflection, WebflatError,
)
from services.foliation_service import FoliationService
from services.homogeneous_service import HomogeneousService
from services.legendre_service import LegendreService
from services.parser_service import parse_oneform, parse_web

logger = logging.getLogger(__name__)


class ReportService:
    def __init__(self):
        self.foliations = FoliationService()
        self.homogeneous = HomogeneousService()
        self.legendre = LegendreService()
        self.curvature = CurvatureService()

    def legendre_web(self, form: str, chart: Union[Chart, int, str] = 1) -> ImplicitWeb:
        foliation = self.foliations.from_affine(parse_oneform(form))
        return self.legendre.legendre(foliation, chart)

    def resolve_web(self, form: Optional[str], web: Optional[str], chart: Union[Chart, int, str] = 1) -> ImplicitWeb:
        """Either the Legendre web of a 1-form or a web given directly as F(x, y, p)"""
        if (form is None) == (web is None):
            raise WebflatError("give exactly one of a 1-form or a web equation")
        if web is not None:
            return parse_web(web)
        return self.legendre_web(form, chart)

    def legendre_report(self, form: str, chart: Union[Chart, int, str] = 1) -> WebResponse:
        return WebResponse.from_web(self.legendre_web(form, chart))

    def curvature_report(self, form: Optional[str] = None, web: Optional[str] = None,
                         chart: Union[Chart, int, str] = 1) -> CurvatureResponse:
        return CurvatureResponse.from_curvature(self.curvature.curvature(self.resolve_web(form, web, chart)))

    def flat_report(self, form: Optional[str] = None, web: Optional[str] = None,
                    chart: Union[Chart, int, str] = 1) -> FlatResponse:
        return FlatResponse(flat=self.curvature.is_flat(self.resolve_web(form, web, chart)))

    def analyze_report(self, form: str) -> AnalyzeResponse:
        foliation = self.foliations.from_affine(parse_oneform(form))
        reports, split, residual = self.foliations.analyze(foliation)
        return AnalyzeResponse(
            degree=foliation.degree,
            singularities=[SingularityResponse.from_report(r) for r in reports],
            invariant_lines=[str(line.form()) for line, _ in split.invariant] if split else [],
            convex=split.convex if split else None,
            inflection=InflectionResponse.from_split(split) if split else None,
            unresolved=[str(f) for f in residual],
        )

    def homogeneous_report(self, form: str) -> HomogeneousResponse:
        H = self.homogeneous.from_form(parse_oneform(form))
        hom_type = self.homogeneous.hom_type(H)
        try:
            cs_poly = str(self.homogeneous.cs_polynomial(H))
        except DegenerateInfinity as e:
            logger.warning(f"⚠️ Camacho-Sad polynomial unavailable: {e}")
            cs_poly = None
        flat = None
        try:
            flat = self.homogeneous.flat_homog3(H) if H.degree == 3 else self.homogeneous.flat_by_criteria(H)
        except (NotSimpleInflection, FiberConditionFailed, NotMaximalInflection, IncompleteFactorization) as e:
            logger.warning(f"⚠️ Flatness criteria do not apply: {e}")
        return HomogeneousResponse(
            degree=H.degree,
            C_H=str(self.homogeneous.cone_tangent(H)),
            D_H=str(self.homogeneous.d_transverse(H)),
            type=str(hom_type),
            convex=hom_type.convex,
            cs_polynomial=cs_poly,
            flat_criterion=flat,
        )
