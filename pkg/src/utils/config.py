"""Application Configuration"""

from pydantic_settings import BaseSettings
from typing import Optional
from functools import lru_cache


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables

    Values here are defaults only. Every computation receives its
    precision, strip width and tolerances as explicit arguments.
    """

    # Application
    APP_NAME: str = "Meixner Asymptotics"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    ENVIRONMENT: str = "development"

    # Extended-precision oracle
    ORACLE_BITS: int = 1024
    ORACLE_MAX_BITS: int = 16384
    ORACLE_REL_TOL: float = 1e-20

    # Asymptotic evaluation
    ASYM_DELTA: Optional[float] = None  # None -> min(0.1, a/2)
    BOUNDARY_TOL: float = 1e-9
    BOUNDARY_NUDGE: float = 1e-10
    SINGULAR_RADIUS: float = 1e-6

    # Airy kernel
    AIRY_SERIES_TERMS: int = 12

    # Sweeps and output
    SWEEP_JOBS: int = 1
    RANDOM_SEED: int = 12345
    OUTPUT_FORMAT: str = "csv"
    FLOAT_DIGITS: int = 17

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "json"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


settings = get_settings()
