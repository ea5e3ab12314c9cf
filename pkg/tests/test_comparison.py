"""Tests for comparison sweeps"""

import math

import pytest

from src.models.params import MeixnerParams
from src.models.sweep import CompareRow, GridSpec, SweepSpec
from src.services.comparison import SINGULAR, ComparisonService, fit_rows


@pytest.fixture
def service(oracle):
    return ComparisonService(oracle)


class TestComparePoint:
    """Test single-point comparison"""

    def test_row(self, service):
        """Test that a regular point produces a finite row"""
        row = service.compare_point(MeixnerParams(c=0.5, beta=1.5, n=50), 7.0)
        assert row.formula_used == "exterior"
        assert row.re_z == 7.0 and row.im_z == 0.0
        assert 0 < row.rel_err < 0.1
        assert row.log_abs_asym == pytest.approx(row.log_abs_exact, abs=0.1)

    def test_singular_marked(self, service):
        """Test that a singular point is marked rather than dropped"""
        row = service.compare_point(MeixnerParams(c=0.5, beta=1.5, n=50), 0.0)
        assert row.formula_used == SINGULAR
        assert math.isnan(row.rel_err)


class TestSweep:
    """Test sweep ordering and fits"""

    def test_order(self, service, precision):
        """Test param-major, then n-major, then grid order"""
        grid = GridSpec(re_min=0.9, re_max=1.1, im_min=0.0, im_max=0.0, step=0.1)
        spec = SweepSpec(c_list=[0.5], beta_list=[1.5], n_list=[20, 40], points=grid.points(),
                         precision=precision)
        rows = service.run(spec)
        assert [r.n for r in rows] == [20, 20, 20, 40, 40, 40]
        assert [r.re_z for r in rows[:3]] == pytest.approx([0.9, 1.0, 1.1])
        assert [r.formula_used for r in rows[:3]] == ["interior", "interior", "exterior"]

    def test_empty(self, service):
        """Test that an empty point list gives no rows"""
        spec = SweepSpec(c_list=[0.5], beta_list=[1.5], n_list=[20])
        assert service.run(spec) == []

    def test_fit_rows(self):
        """Test one fit per (c, beta, z) group, skipping singular rows"""
        def row(n, err, re=7.0, formula="exterior"):
            return CompareRow(n=n, c=0.5, beta=1.5, re_z=re, im_z=0.0, formula_used=formula,
                              log_abs_exact=0.0, log_abs_asym=0.0, phase_exact=0.0, phase_asym=0.0,
                              rel_err=err)

        rows = [row(32, 1 / 32), row(64, 1 / 64), row(32, math.nan, 0.0, SINGULAR), row(64, math.nan, 0.0, SINGULAR)]
        fits = fit_rows(rows)
        assert len(fits) == 1
        assert fits[0].order == pytest.approx(1.0)
