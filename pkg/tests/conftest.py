"""Shared fixtures"""

import numpy as np
import pytest
import structlog

from src.models.params import MeixnerParams, PrecisionConfig
from src.services.asymptotics import turning_points
from src.services.meixner_exact import OracleService


@pytest.fixture
def half():
    """Turning points for c = 0.5"""
    return turning_points(0.5)


@pytest.fixture
def quarter():
    """Turning points for c = 0.25 (a = 1/3, b = 3)"""
    return turning_points(0.25)


@pytest.fixture
def params_100():
    return MeixnerParams(c=0.5, beta=1.5, n=100)


@pytest.fixture
def precision():
    """Oracle precision small enough for fast tests"""
    return PrecisionConfig(bits=256, max_bits=4096, rel_tol=1e-20)


@pytest.fixture
def oracle(precision):
    return OracleService(precision)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(autouse=True)
def reset_structlog():
    """Drop any logging configuration a test installed"""
    yield
    structlog.reset_defaults()
