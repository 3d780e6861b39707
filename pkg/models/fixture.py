"""
Catalog fixtures, their expectations and verification reports
"""

from dataclasses import dataclass, field
from typing import List, Optional

from models.foliation import AffineOneForm
from models.web import Chart


@dataclass(frozen=True)
class Expected:
    degree: Optional[int] = None
    flat: Optional[bool] = None
    hom_type: Optional[str] = None
    cs_poly: Optional[str] = None
    convex: Optional[bool] = None
    sing_count: Optional[int] = None
    radial_order_2: Optional[bool] = None
    web: Optional[str] = None
    discriminant: Optional[str] = None
    notes: str = ""


@dataclass(frozen=True)
class Fixture:
    id: str
    kind: str
    form: AffineOneForm
    text: str
    chart: Chart
    expected: Expected


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    passed: bool


@dataclass
class FixtureReport:
    fixture_id: str
    checks: List[Check] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(check.passed for check in self.checks)


@dataclass
class CatalogReport:
    reports: List[FixtureReport] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def passed(self) -> int:
        return sum(1 for report in self.reports if report.passed)

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total
