"""
Homogeneous foliations API router
"""

from fastapi import APIRouter, HTTPException

from config import settings
from schemas.reports import FormRequest, HomogeneousResponse
from services import compute_guard
from services.errors import WebflatError
from services.report_service import ReportService

router = APIRouter()
report_service = ReportService()

@router.post("/", response_model=HomogeneousResponse)
def homogeneous_report(request: FormRequest):
    """Type, Camacho-Sad polynomial and flatness of a homogeneous foliation"""
    try:
        with compute_guard.limits(settings.WEBFLAT_TIMEOUT_SECONDS):
            return report_service.homogeneous_report(request.form)
    except WebflatError as e:
        raise HTTPException(status_code=e.http_status, detail=str(e))
