"""Tests for convergence-order fits"""

import math

import pytest

from src.models.params import MeixnerParams
from src.services.asymptotics import zero_spacing
from src.services.comparison import ComparisonService
from src.services.convergence import doubling_ratios, fit_order
from src.utils.errors import DomainError


class TestFitOrder:
    """Test the least-squares order fit"""

    def test_exact_first_order(self):
        """Test err = 3/n gives order 1 with zero residual"""
        ns = [32, 64, 128, 256]
        fit = fit_order(ns, [3.0 / n for n in ns], label="synthetic")
        assert fit.order == pytest.approx(1.0)
        assert fit.intercept == pytest.approx(math.log(3.0))
        assert fit.residual == pytest.approx(0.0, abs=1e-12)
        assert fit.label == "synthetic"

    def test_second_order(self):
        """Test err = 1/n^2"""
        ns = [10, 20, 40]
        assert fit_order(ns, [n ** -2.0 for n in ns]).order == pytest.approx(2.0)

    def test_invalid_input(self):
        """Test mismatched lengths, short input and non-positive errors"""
        with pytest.raises(DomainError):
            fit_order([1, 2], [0.1])
        with pytest.raises(DomainError):
            fit_order([1], [0.1])
        with pytest.raises(DomainError):
            fit_order([1, 2], [0.1, 0.0])

    def test_doubling_ratios(self):
        """Test consecutive error ratios"""
        assert doubling_ratios([8.0, 4.0, 1.0]) == [2.0, 4.0]


class TestFormulaConvergence:
    """Test the observed order of the asymptotic formulas"""

    @pytest.mark.parametrize("beta", [1.0, 1.5])
    @pytest.mark.parametrize("z", [7.0, 3.0, 0.5, -1.0])
    def test_first_order(self, oracle, z, beta):
        """Test order >= 0.8 and err(256) <= 0.02, with real points inside (a, b) included"""
        fit = ComparisonService(oracle).convergence(0.5, beta, z, [32, 64, 128, 256])
        assert fit.order >= 0.8
        assert fit.errors[-1] <= 0.02

    def test_band_points_use_envelope(self, oracle):
        """Test that real points inside (a, b) are measured against the Airy envelope"""
        service = ComparisonService(oracle)
        inside = service.convergence(0.5, 1.0, 3.0, [32, 64])
        outside = service.convergence(0.5, 1.0, 7.0, [32, 64])
        assert inside.label.endswith("envelope")
        assert not outside.label.endswith("envelope")
        assert inside.errors[0] == service.envelope_error(MeixnerParams(c=0.5, beta=1.0, n=32), 3.0)


class TestEnvelopeError:
    """Test the windowed error norm at real points of the oscillatory band"""

    def test_small_and_finite(self, oracle):
        """Test the error at x = 3 and x = 0.5 for n = 128"""
        service = ComparisonService(oracle)
        for x in (3.0, 0.5):
            err = service.envelope_error(MeixnerParams(c=0.5, beta=1.0, n=128), x)
            assert math.isfinite(err)
            assert 0 < err < 0.02

    def test_outside_band(self, oracle):
        """Test that points beyond b and windows leaving (a, b) are refused"""
        service = ComparisonService(oracle)
        with pytest.raises(DomainError):
            service.envelope_error(MeixnerParams(c=0.5, beta=1.0, n=32), 7.0)
        with pytest.raises(DomainError):
            service.envelope_error(MeixnerParams(c=0.5, beta=1.0, n=32), 5.8)


class TestZeroSpacing:
    """Test the local spacing of real zeros"""

    def test_scales_with_n(self, half):
        """Test spacing ~ 1/n and refusal outside (a, b)"""
        assert zero_spacing(3.0, half, 64) == pytest.approx(zero_spacing(3.0, half, 32) / 2)
        assert zero_spacing(1.0, half, 1) == pytest.approx(4.0)
        with pytest.raises(DomainError):
            zero_spacing(7.0, half, 32)
