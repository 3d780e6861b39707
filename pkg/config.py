"""
Configuration settings for the Webflat foliation and web toolkit
"""

import logging
import os
import sys
from dotenv import load_dotenv

load_dotenv()

class Settings:
    # Polynomial kernel limits
    WEBFLAT_MAX_TERMS: int = int(os.getenv("WEBFLAT_MAX_TERMS", "5000000"))
    WEBFLAT_TIMEOUT_SECONDS: float = float(os.getenv("WEBFLAT_TIMEOUT_SECONDS", "0"))

    # Web computations
    WEBFLAT_DEFAULT_CHART: int = int(os.getenv("WEBFLAT_DEFAULT_CHART", "1"))
    WEBFLAT_SAMPLING_THRESHOLD: int = int(os.getenv("WEBFLAT_SAMPLING_THRESHOLD", "6"))
    WEBFLAT_SAMPLING_SEED: int = int(os.getenv("WEBFLAT_SAMPLING_SEED", "2015"))

    # Singularity analysis
    WEBFLAT_SHEAR_RETRIES: int = int(os.getenv("WEBFLAT_SHEAR_RETRIES", "8"))

    # Fixture manifest
    WEBFLAT_CATALOG_PATH: str = os.getenv(
        "WEBFLAT_CATALOG_PATH",
        os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "catalog.ini"),
    )

    # API
    API_HOST: str = os.getenv("API_HOST", "0.0.0.0")
    API_PORT: int = int(os.getenv("API_PORT", "8000"))
    CORS_ORIGINS: str = os.getenv("CORS_ORIGINS", "*")

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

settings = Settings()


def configure_logging(level: str = None) -> None:
    """Route all service logging to stderr at the configured level"""
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
