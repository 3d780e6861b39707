"""
Catalog service: load the fixture manifest and recompute every expectation
"""

import configparser
import logging
from typing import Callable, Dict, List, Optional

from config import settings
from models.fixture import CatalogReport, Check, Expected, Fixture, FixtureReport
from models.homogeneous import HomType
from models.web import Chart
from services import compute_guard
from services.curvature_service import CurvatureService
from services.elimination import proportional
from services.errors import UnknownFixture, WebflatError
from services.foliation_service import FoliationService
from services.homogeneous_service import HomogeneousService, families
from services.legendre_service import LegendreService
from services.parser_service import format_form, parse_dual_web, parse_oneform, parse_polynomial

logger = logging.getLogger(__name__)

def _family_type(name: str, d: int) -> HomType:
    """Type of a general degree family member, read off its name"""
    radial: Dict[int, int] = {}
    transverse: Dict[int, int] = {}

    def bump(target: Dict[int, int], k: int) -> None:
        target[k] = target.get(k, 0) + 1

    kind = name.split("_")[0]
    nu = int(name.split("_nu")[1]) if "_nu" in name else 0
    if kind == "omega1":
        bump(radial, d - 1), bump(radial, d - 1)
    elif kind == "omega2":
        bump(transverse, d - 1), bump(transverse, d - 1)
    elif kind in ("omega3", "omega4"):
        bump(radial, nu), bump(radial, d - nu - 1)
        bump(radial if kind == "omega3" else transverse, d - 1)
    else:
        bump(radial, d - 2), bump(transverse, 1)
        bump(radial if kind == "omega5" else transverse, d - 1)
    return HomType(radial, transverse)


class CatalogService:
    def __init__(self, path: Optional[str] = None):
        self.path = path or settings.WEBFLAT_CATALOG_PATH
        self.foliations = FoliationService()
        self.homogeneous = HomogeneousService()
        self.legendre = LegendreService()
        self.curvature = CurvatureService()
        self._fixtures: Optional[List[Fixture]] = None

    # Loading

    def load_catalog(self, include_aux: bool = True) -> List[Fixture]:
        if self._fixtures is None:
            self._fixtures = self._read_manifest()
            logger.info(f"✅ Loaded {len(self._fixtures)} fixtures from {self.path}")
        if include_aux:
            return list(self._fixtures)
        return [fixture for fixture in self._fixtures if fixture.kind == "primary"]

    def get_fixture(self, fixture_id: str) -> Fixture:
        for fixture in self.load_catalog():
            if fixture.id == fixture_id:
                return fixture
        raise UnknownFixture(f"no fixture named '{fixture_id}'")

    def _read_manifest(self) -> List[Fixture]:
        parser = configparser.ConfigParser(interpolation=None)
        with open(self.path, encoding="utf-8") as handle:
            parser.read_file(handle)
        fixtures: List[Fixture] = []
        for section in parser.sections():
            if section == "families":
                continue
            entry = parser[section]
            fixtures.append(Fixture(
                id=section,
                kind=entry.get("kind", "aux"),
                form=parse_oneform(entry["form"]),
                text=entry["form"],
                chart=Chart.parse(entry.get("chart", str(settings.WEBFLAT_DEFAULT_CHART))),
                expected=Expected(
                    degree=entry.getint("degree") if "degree" in entry else None,
                    flat=entry.getboolean("flat") if "flat" in entry else None,
                    hom_type=entry.get("type"),
                    cs_poly=entry.get("cs_poly"),
                    convex=entry.getboolean("convex") if "convex" in entry else None,
                    sing_count=entry.getint("sing_count") if "sing_count" in entry else None,
                    radial_order_2=entry.getboolean("radial_order_2") if "radial_order_2" in entry else None,
                    web=entry.get("web"),
                    discriminant=entry.get("discriminant"),
                    notes=entry.get("notes", ""),
                ),
            ))
        if parser.has_section("families"):
            degrees = [int(d) for d in parser["families"]["degrees"].split(",")]
            for d in degrees:
                for name, form in families(d).items():
                    fixtures.append(Fixture(
                        id=name,
                        kind="family",
                        form=form,
                        text=format_form(form),
                        chart=Chart.DUAL1,
                        expected=Expected(degree=d, flat=True, hom_type=str(_family_type(name, d))),
                    ))
        return fixtures

    # Verification

    def verify_fixture(self, fixture: Fixture) -> FixtureReport:
        """Recompute every expected value; failures become report entries"""
        report = FixtureReport(fixture.id)
        expected = fixture.expected
        checks: List[tuple] = [
            ("degree", expected.degree, self._degree),
            ("flat", expected.flat, self._flat),
            ("type", expected.hom_type, self._type),
            ("cs_poly", expected.cs_poly, self._cs_poly),
            ("convex", expected.convex, self._convex),
            ("sing_count", expected.sing_count, self._sing_count),
            ("radial_order_2", expected.radial_order_2, self._radial_order_2),
            ("web", expected.web, self._web),
            ("discriminant", expected.discriminant, self._discriminant),
        ]
        try:
            for name, value, compute in checks:
                if value is None:
                    continue
                report.checks.append(self._run_check(name, value, compute, fixture))
        except WebflatError as e:
            report.error = f"{type(e).__name__}: {e}"
            logger.error(f"❌ Fixture {fixture.id} failed: {report.error}")
        status = "PASS" if report.passed else "FAIL"
        logger.info(f"🔍 Fixture {fixture.id}: {status}")
        return report

    def verify_catalog(self, include_aux: bool = True, timeout_seconds: Optional[float] = None) -> CatalogReport:
        report = CatalogReport()
        for fixture in self.load_catalog(include_aux):
            with compute_guard.limits(timeout_seconds=timeout_seconds):
                report.reports.append(self.verify_fixture(fixture))
        logger.info(f"✅ Catalog verified: {report.passed}/{report.total} PASS")
        return report

    @staticmethod
    def _run_check(name: str, value, compute: Callable, fixture: Fixture) -> Check:
        actual, passed = compute(fixture, value)
        return Check(name=name, expected=str(value).lower() if isinstance(value, bool) else str(value),
                     actual=str(actual).lower() if isinstance(actual, bool) else str(actual), passed=passed)

    def _degree(self, fixture: Fixture, value: int):
        degree = self.legendre.foliation_degree(fixture.form)
        return degree, degree == value

    def _flat(self, fixture: Fixture, value: bool):
        degree = self.legendre.foliation_degree(fixture.form)
        if degree == 3:
            web = self.legendre.legendre(self.foliations.from_affine(fixture.form), fixture.chart)
            flat = self.curvature.is_flat(web)
        else:
            flat = self.homogeneous.flat_by_criteria(self.homogeneous.from_form(fixture.form))
        return flat, flat == value

    def _type(self, fixture: Fixture, value: str):
        actual = self.homogeneous.hom_type(self.homogeneous.from_form(fixture.form))
        return actual, actual == HomType.parse(value)

    def _cs_poly(self, fixture: Fixture, value: str):
        actual = self.homogeneous.cs_polynomial(self.homogeneous.from_form(fixture.form))
        return actual, actual == parse_polynomial(value, ("lam",)).monic()

    def _convex(self, fixture: Fixture, value: bool):
        convex = self.foliations.inflection_split(self.foliations.from_affine(fixture.form)).convex
        return convex, convex == value

    def _sing_count(self, fixture: Fixture, value: int):
        count = self.foliations.singular_point_count(self.foliations.from_affine(fixture.form))
        return count, count == value

    def _radial_order_2(self, fixture: Fixture, value: bool):
        foliation = self.foliations.from_affine(fixture.form)
        points, _ = self.foliations.singular_points(foliation)
        present = any(self.foliations.radial_order(foliation, point) == 2 for point in points)
        return present, present == value

    def _web(self, fixture: Fixture, value: str):
        web = self.legendre.legendre(self.foliations.from_affine(fixture.form), fixture.chart)
        target = parse_dual_web(value, web.fiber, fixture.chart).F
        return web.F, proportional(web.F, target)

    def _discriminant(self, fixture: Fixture, value: str):
        web = self.legendre.legendre(self.foliations.from_affine(fixture.form), fixture.chart)
        actual = self.curvature.p_discriminant(web)
        target = parse_polynomial(value, web.F.ring.names)
        return actual, proportional(actual, target)
