"""
Catalog API router
"""

from fastapi import APIRouter, HTTPException
from typing import List

from config import settings
from schemas.reports import FixtureReportResponse, FixtureSummary
from services import compute_guard
from services.catalog_service import CatalogService
from services.errors import WebflatError

router = APIRouter()
catalog_service = CatalogService()

@router.get("/", response_model=List[FixtureSummary])
def list_fixtures(include_aux: bool = True):
    """List the catalog fixtures"""
    return [FixtureSummary.from_fixture(f) for f in catalog_service.load_catalog(include_aux)]

@router.get("/{fixture_id}/verify", response_model=FixtureReportResponse)
def verify_fixture(fixture_id: str):
    """Recompute every expectation of one fixture"""
    try:
        fixture = catalog_service.get_fixture(fixture_id)
        with compute_guard.limits(settings.WEBFLAT_TIMEOUT_SECONDS):
            return FixtureReportResponse.from_report(catalog_service.verify_fixture(fixture))
    except WebflatError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))
