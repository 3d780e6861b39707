"""
Foliations API router
"""

from fastapi import APIRouter, HTTPException

from config import settings
from schemas.reports import AnalyzeResponse, LegendreRequest, FormRequest, WebResponse
from services import compute_guard
from services.errors import WebflatError
from services.report_service import ReportService

router = APIRouter()
report_service = ReportService()

@router.post("/analyze", response_model=AnalyzeResponse)
def analyze_foliation(request: FormRequest):
    """Singular points, local invariants, invariant lines and inflection split"""
    try:
        with compute_guard.limits(settings.WEBFLAT_TIMEOUT_SECONDS):
            return report_service.analyze_report(request.form)
    except WebflatError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))

@router.post("/legendre", response_model=WebResponse)
def legendre_transform(request: LegendreRequest):
    """Legendre web of the foliation in the requested dual chart"""
    try:
        with compute_guard.limits(settings.WEBFLAT_TIMEOUT_SECONDS):
            return report_service.legendre_report(request.form, request.chart)
    except WebflatError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))
