"""
Pydantic schemas for API validation and JSON output
"""

from fractions import Fraction
from pydantic import BaseModel, Field
from typing import List, Optional

from models.fixture import CatalogReport, Fixture, FixtureReport
from models.field import FieldElem
from models.foliation import InflectionSplit, ProjPoint, SingularityReport
from models.polynomial import MPoly, VarSet
from models.web import Curvature2Form, ImplicitWeb
from services.errors import FormSyntaxError


def _point(point: ProjPoint) -> List[str]:
    return [str(c) for c in point.coords]


# Polynomials

class FieldElemPayload(BaseModel):
    """Coordinates in the basis 1, i, sqrt3, i*sqrt3 as rational strings"""
    c0: str = "0"
    c1: str = "0"
    c2: str = "0"
    c3: str = "0"

    @classmethod
    def from_elem(cls, value: FieldElem) -> "FieldElemPayload":
        return cls(c0=str(value.c0), c1=str(value.c1), c2=str(value.c2), c3=str(value.c3))

    def to_elem(self) -> FieldElem:
        try:
            return FieldElem(Fraction(self.c0), Fraction(self.c1), Fraction(self.c2), Fraction(self.c3))
        except (ValueError, ZeroDivisionError) as e:
            raise FormSyntaxError(f"bad field coordinate: {e}") from e


class TermPayload(BaseModel):
    exp: List[int]
    coeff: FieldElemPayload


class PolynomialPayload(BaseModel):
    ring: List[str]
    terms: List[TermPayload]

    @classmethod
    def from_poly(cls, poly: MPoly) -> "PolynomialPayload":
        return cls(
            ring=list(poly.ring.names),
            terms=[TermPayload(exp=list(exp), coeff=FieldElemPayload.from_elem(c)) for exp, c in poly.items()],
        )

    def to_poly(self) -> MPoly:
        try:
            ring = VarSet(tuple(self.ring))
        except ValueError as e:
            raise FormSyntaxError(str(e)) from e
        width = len(ring)
        for term in self.terms:
            if len(term.exp) != width or any(e < 0 for e in term.exp):
                raise FormSyntaxError(f"exponent {term.exp} does not fit ring {self.ring}")
        return MPoly(ring, {tuple(t.exp): t.coeff.to_elem() for t in self.terms})


# Requests

class FormRequest(BaseModel):
    form: str = Field(..., description="Affine 1-form such as 'y^3*dx - x^3*dy'")


class LegendreRequest(FormRequest):
    chart: int = Field(1, ge=1, le=3)


class WebRequest(BaseModel):
    form: Optional[str] = None
    web: Optional[str] = Field(None, description="F(x, y, p) with p = dy/dx")
    chart: int = Field(1, ge=1, le=3)


# Responses

class WebResponse(BaseModel):
    equation: str
    chart: int
    order: int
    base: List[str]
    fiber: str

    @classmethod
    def from_web(cls, web: ImplicitWeb) -> "WebResponse":
        return cls(equation=str(web.F), chart=web.chart.number, order=web.order, base=list(web.base), fiber=web.fiber)


class CurvatureResponse(BaseModel):
    flat: bool
    numerator: str
    denominator: str

    @classmethod
    def from_curvature(cls, curvature: Curvature2Form) -> "CurvatureResponse":
        return cls(flat=curvature.flat, numerator=str(curvature.reduced_numerator),
                   denominator=str(curvature.reduced_denominator))


class FlatResponse(BaseModel):
    flat: bool


class CamachoSadEntry(BaseModel):
    line: str
    value: str


class SingularityResponse(BaseModel):
    point: List[str]
    nu: int
    tau: int
    milnor: Optional[int]
    nondegenerate: bool
    radial_order: int
    bb: Optional[str]
    cs: List[CamachoSadEntry]

    @classmethod
    def from_report(cls, report: SingularityReport) -> "SingularityResponse":
        return cls(
            point=_point(report.point),
            nu=report.nu,
            tau=report.tau,
            milnor=report.milnor,
            nondegenerate=report.nondegenerate,
            radial_order=report.radial_order,
            bb=None if report.baum_bott is None else str(report.baum_bott),
            cs=[CamachoSadEntry(line=str(line.form()), value=str(value)) for line, value in report.camacho_sad],
        )


class InflectionFactor(BaseModel):
    factor: str
    order: int


class InflectionResponse(BaseModel):
    inv: List[InflectionFactor]
    tr: List[InflectionFactor]

    @classmethod
    def from_split(cls, split: InflectionSplit) -> "InflectionResponse":
        invariant = [(line.form(), m) for line, m in split.invariant] + list(split.invariant_curves)
        return cls(
            inv=[InflectionFactor(factor=str(factor), order=m) for factor, m in invariant],
            tr=[InflectionFactor(factor=str(factor), order=m) for factor, m in split.transverse],
        )


class AnalyzeResponse(BaseModel):
    degree: int
    singularities: List[SingularityResponse]
    invariant_lines: List[str]
    convex: Optional[bool]
    inflection: Optional[InflectionResponse]
    unresolved: List[str] = Field(default_factory=list)


class HomogeneousResponse(BaseModel):
    degree: int
    C_H: str
    D_H: str
    type: str
    convex: bool
    cs_polynomial: Optional[str]
    flat_criterion: Optional[bool]


class CheckResponse(BaseModel):
    name: str
    expected: str
    actual: str
    passed: bool


class FixtureReportResponse(BaseModel):
    fixture_id: str
    passed: bool
    checks: List[CheckResponse]
    error: Optional[str]

    @classmethod
    def from_report(cls, report: FixtureReport) -> "FixtureReportResponse":
        return cls(
            fixture_id=report.fixture_id,
            passed=report.passed,
            checks=[CheckResponse(name=c.name, expected=c.expected, actual=c.actual, passed=c.passed) for c in report.checks],
            error=report.error,
        )


class CatalogReportResponse(BaseModel):
    total: int
    passed: int
    reports: List[FixtureReportResponse]

    @classmethod
    def from_report(cls, report: CatalogReport) -> "CatalogReportResponse":
        return cls(total=report.total, passed=report.passed,
                   reports=[FixtureReportResponse.from_report(r) for r in report.reports])


class FixtureSummary(BaseModel):
    id: str
    kind: str
    form: str
    chart: int
    notes: str

    @classmethod
    def from_fixture(cls, fixture: Fixture) -> "FixtureSummary":
        return cls(id=fixture.id, kind=fixture.kind, form=fixture.text,
                   chart=fixture.chart.number, notes=fixture.expected.notes)

