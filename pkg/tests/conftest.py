"""
Shared service fixtures
"""

import pytest

from services.catalog_service import CatalogService
from services.curvature_service import CurvatureService
from services.foliation_service import FoliationService
from services.homogeneous_service import HomogeneousService
from services.legendre_service import LegendreService
from services.parser_service import parse_oneform


@pytest.fixture(scope="session")
def foliations():
    return FoliationService()


@pytest.fixture(scope="session")
def homogeneous():
    return HomogeneousService()


@pytest.fixture(scope="session")
def legendre():
    return LegendreService()


@pytest.fixture(scope="session")
def curvature():
    return CurvatureService()


@pytest.fixture(scope="session")
def catalog():
    return CatalogService()


@pytest.fixture(scope="session")
def fermat(foliations):
    return foliations.from_affine(parse_oneform("(x^3-x)*dy - (y^3-y)*dx"))
