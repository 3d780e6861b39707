"""
Webs API router
"""

from fastapi import APIRouter, HTTPException

from config import settings
from schemas.reports import CurvatureResponse, FlatResponse, WebRequest
from services import compute_guard
from services.errors import WebflatError
from services.report_service import ReportService

router = APIRouter()
report_service = ReportService()

@router.post("/curvature", response_model=CurvatureResponse)
def web_curvature(request: WebRequest):
    """Reduced curvature of a 3-web given directly or as a Legendre transform"""
    try:
        with compute_guard.limits(settings.WEBFLAT_TIMEOUT_SECONDS):
            return report_service.curvature_report(request.form, request.web, request.chart)
    except WebflatError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))

@router.post("/flat", response_model=FlatResponse)
def web_flatness(request: WebRequest):
    try:
        with compute_guard.limits(settings.WEBFLAT_TIMEOUT_SECONDS):
            return report_service.flat_report(request.form, request.web, request.chart)
    except WebflatError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))
