#!/usr/bin/env python3
"""
Webflat Service
Exact algebra for planar foliations, their Legendre webs and web curvature
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from contextlib import asynccontextmanager
import uvicorn

from config import configure_logging, settings

# Import routers
from routers import foliations, webs, homogeneous, catalog

@asynccontextmanager
async def lifespan(app: FastAPI):
    # Startup
    configure_logging()
    try:
        fixtures = catalog.catalog_service.load_catalog()
        print(f"✅ Webflat Service started with {len(fixtures)} catalog fixtures")
    except Exception as e:
        print(f"❌ Error loading the catalog: {e}")
        raise
    yield
    # Shutdown
    print("🔄 Shutting down Webflat Service")

app = FastAPI(
    title="Webflat Service",
    description="Exact algebra for planar foliations, their Legendre webs and web curvature",
    version="1.0.0",
    lifespan=lifespan
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=[origin.strip() for origin in settings.CORS_ORIGINS.split(",")],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(foliations.router, prefix="/foliations", tags=["foliations"])
app.include_router(webs.router, prefix="/webs", tags=["webs"])
app.include_router(homogeneous.router, prefix="/homogeneous", tags=["homogeneous"])
app.include_router(catalog.router, prefix="/catalog", tags=["catalog"])

@app.get("/")
async def root():
    return {"message": "Webflat Service", "status": "running"}

@app.get("/health")
async def health_check():
    return {"status": "healthy", "service": "webflat"}

if __name__ == "__main__":
    uvicorn.run("main:app", host=settings.API_HOST, port=settings.API_PORT, reload=True)
