"""
Fixture manifest loading and verification
"""

import pytest

from models.fixture import Expected, Fixture
from models.web import Chart
from services.catalog_service import CatalogService
from services.errors import UnknownFixture
from services.parser_service import parse_oneform


def _fixture(form: str, **expected) -> Fixture:
    return Fixture(id="adhoc", kind="aux", form=parse_oneform(form), text=form,
                   chart=Chart.DUAL1, expected=Expected(**expected))


def test_catalog_sizes(catalog):
    primary = catalog.load_catalog(include_aux=False)
    assert [f.id for f in primary] == [f"H{k}" for k in range(1, 12)] + [f"F{k}" for k in range(1, 6)]
    everything = catalog.load_catalog()
    assert sum(1 for f in everything if f.kind == "aux") == 7
    assert sum(1 for f in everything if f.kind == "family") == 6 + 8 + 10
    assert len(everything) == 47


def test_fixture_contents(catalog):
    h10 = catalog.get_fixture("H10")
    assert h10.text == "(3*x+sqrt3*y)*y^2*dx + (3*y-sqrt3*x)*x^2*dy"
    assert h10.expected.hom_type == "2·R1+2·T1"
    assert h10.chart == Chart.DUAL1
    assert catalog.get_fixture("F3").expected.sing_count == 13
    assert catalog.get_fixture("F1").expected.convex is True
    assert catalog.get_fixture("aux_cfamily_c1").chart == Chart.DUAL2
    family = catalog.get_fixture("omega4_d5_nu2")
    assert family.kind == "family" and family.expected.hom_type == "2·R2+1·T4"


def test_unknown_fixture(catalog):
    with pytest.raises(UnknownFixture) as info:
        catalog.get_fixture("H12")
    assert info.value.exit_code == 2
    assert info.value.http_status == 404


def test_primary_expectations_are_pairwise_distinct(catalog):
    signatures = [
        (e.hom_type, e.cs_poly, e.convex, e.sing_count, e.radial_order_2)
        for e in (f.expected for f in catalog.load_catalog(include_aux=False))
    ]
    assert len(set(signatures)) == len(signatures)


def test_verify_a_homogeneous_fixture(catalog):
    report = catalog.verify_fixture(catalog.get_fixture("H1"))
    assert report.error is None
    assert {c.name for c in report.checks} == {"degree", "flat", "type", "cs_poly", "convex", "sing_count"}
    assert report.passed


def test_verify_a_counterexample(catalog):
    report = catalog.verify_fixture(catalog.get_fixture("aux_homog_not_flat"))
    assert report.passed
    flat = next(c for c in report.checks if c.name == "flat")
    assert flat.expected == "false" and flat.actual == "false"


def test_failed_expectations_are_reported(catalog):
    report = catalog.verify_fixture(_fixture("y^3*dx - x^3*dy", degree=4))
    assert not report.passed
    assert report.checks[0].actual == "3"


def test_errors_are_reported(catalog):
    report = catalog.verify_fixture(_fixture("(x^3 + 1)*dx + y^3*dy", hom_type="2·R2"))
    assert not report.passed
    assert report.error.startswith("NotHomogeneous")


def test_alternate_manifest(tmp_path):
    manifest = tmp_path / "catalog.ini"
    manifest.write_text(
        "[mine]\nkind = primary\nform = y^3*dx - x^3*dy\ndegree = 3\ntype = 2·R2\n",
        encoding="utf-8",
    )
    catalog = CatalogService(str(manifest))
    fixtures = catalog.load_catalog(include_aux=False)
    assert [f.id for f in fixtures] == ["mine"]
    report = catalog.verify_catalog()
    assert report.total == 1 and report.all_passed


@pytest.mark.slow
def test_the_whole_catalog_verifies(catalog):
    report = catalog.verify_catalog(include_aux=True)
    failures = [r.fixture_id for r in report.reports if not r.passed]
    assert failures == []
    assert report.total == 47
