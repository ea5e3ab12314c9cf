"""Tests for the verification suites"""

import pytest

from src.services.verification import SUITES, VerificationService


@pytest.fixture(scope="module")
def verifier():
    return VerificationService(seed=12345)


def _failures(report):
    return [(c.name, c.residual, c.tolerance, c.detail) for c in report.failures]


class TestSuites:
    """Test that every suite passes on the default parameters"""

    @pytest.mark.parametrize("suite", SUITES)
    def test_suite_passes(self, verifier, suite):
        """Test a single suite"""
        report = verifier.run(suite)
        assert report.suite == suite
        assert report.checks
        assert report.passed, _failures(report)

    def test_unknown_suite(self, verifier):
        """Test that an unknown suite name is refused"""
        with pytest.raises(ValueError):
            verifier.run("nonsense")


class TestChecks:
    """Test check bookkeeping"""

    def test_nan_fails(self):
        """Test that a NaN residual never passes"""
        assert not VerificationService._check("x", float("nan"), 1.0).passed

    def test_guard_records_errors(self):
        """Test that a raising check becomes a failed result"""
        def boom():
            raise ValueError("bad point")

        result = VerificationService._guard("boom", boom)
        assert not result.passed
        assert "bad point" in result.detail["error"]
