"""Tests for the extended-precision oracle"""

import math
from fractions import Fraction

import pytest

from src.models.params import MeixnerParams, PrecisionConfig
from src.services.meixner_exact import (
    OracleService,
    connection_residual,
    escalate,
    gamma_n_sq,
    meixner_eval,
    meixner_hyp2f1,
    meixner_orthogonality_residual,
    meixner_sum,
    monic_eval,
    orthogonality_residual,
    scaled_monic_eval,
    weight,
)
from src.services.special_kernel import mp_context
from src.utils.errors import OracleConvergenceError, PoleError


class TestMeixnerValues:
    """Test small-degree values"""

    def test_degree_one(self, precision):
        """Test m_1(2; 1.5, 0.5) = -0.5 and its monic form"""
        p = MeixnerParams(c=0.5, beta=1.5, n=1)
        assert float(meixner_eval(p, 2, precision).value) == pytest.approx(-0.5, rel=1e-30)
        assert float(monic_eval(p, 2, precision).value) == pytest.approx(0.5, rel=1e-30)

    def test_degree_two(self, precision):
        """Test m_2(3; 1, 0.5) = -4"""
        p = MeixnerParams(c=0.5, beta=1.0, n=2)
        assert float(meixner_eval(p, 3, precision).value) == pytest.approx(-4.0, rel=1e-30)
        assert float(monic_eval(p, 3, precision).value) == pytest.approx(-4.0, rel=1e-30)

    def test_degree_zero(self, precision):
        """Test that pi_0 is identically one"""
        p = MeixnerParams(c=0.3, beta=1.2, n=0)
        assert complex(monic_eval(p, complex(2, 5), precision).value) == 1

    def test_hyp2f1_agreement(self):
        """Test the term recurrence against mpmath's hypergeometric"""
        for x in (0.3, complex(1, 2), -4.25):
            s = meixner_sum(6, 1.5, 0.5, x, 256)
            h = meixner_hyp2f1(6, 1.5, 0.5, x, 256)
            assert float(abs(s - h) / abs(h)) < 1e-60

    def test_real_on_real_axis(self, precision):
        """Test that real arguments give real values"""
        value = monic_eval(MeixnerParams(c=0.5, beta=1.5, n=7), 2.3, precision).value
        assert mp_context(64).im(value) == 0

    def test_conjugate_symmetry(self, precision):
        """Test pi_n(conj z) = conj pi_n(z)"""
        p = MeixnerParams(c=0.4, beta=1.3, n=9)
        z = complex(1.3, 0.7)
        up = monic_eval(p, z, precision).value
        down = monic_eval(p, z.conjugate(), precision).value
        assert float(abs(down - up.conjugate()) / abs(up)) < 1e-60

    def test_monic_leading_coefficient(self, precision):
        """Test that the n-th forward difference of pi_n is n!"""
        for n in (1, 3, 5):
            p = MeixnerParams(c=0.5, beta=1.5, n=n)
            diff = sum((-1) ** (n - j) * math.comb(n, j) * monic_eval(p, j, precision).value
                       for j in range(n + 1))
            assert float(diff) == pytest.approx(math.factorial(n), rel=1e-30)


class TestWeightAndNorms:
    """Test the weight and squared norms"""

    def test_weight(self):
        """Test w(k) at beta = 1 and beta = 1.5"""
        assert float(weight(3, MeixnerParams(c=0.5, beta=1.0, n=0))) == pytest.approx(0.125)
        assert float(weight(0, MeixnerParams(c=0.5, beta=1.5, n=0))) == pytest.approx(math.sqrt(math.pi) / 2)

    def test_weight_pole(self):
        """Test that w(-1) is a pole"""
        with pytest.raises(PoleError):
            weight(-1, MeixnerParams(c=0.5, beta=1.0, n=0))

    def test_gamma_n_sq(self):
        """Test gamma_0^2 = 1/2 and gamma_1^2 = 1/4 at c = 1/2, beta = 1"""
        assert float(gamma_n_sq(MeixnerParams(c=0.5, beta=1.0, n=0))) == pytest.approx(0.5)
        assert float(gamma_n_sq(MeixnerParams(c=0.5, beta=1.0, n=1))) == pytest.approx(0.25)


class TestOrthogonality:
    """Test the discrete orthogonality relation"""

    @pytest.mark.parametrize("n,m", [(0, 0), (1, 0), (2, 3), (4, 4)])
    def test_monic(self, n, m):
        """Test truncated sums against delta_nm / gamma_n^2"""
        report = orthogonality_residual(n, m, MeixnerParams(c=0.5, beta=1.5, n=0), 400)
        assert report.certified
        assert report.within_bound

    def test_geometric_sum(self):
        """Test the beta = 1, n = p = 0 sum, a plain geometric series"""
        report = orthogonality_residual(0, 0, MeixnerParams(c=0.5, beta=1.0, n=0), 200)
        assert report.target == pytest.approx(2.0)
        assert report.residual <= 2.0 ** -199

    def test_non_monic(self):
        """Test the non-monic normalisation"""
        report = meixner_orthogonality_residual(2, 2, MeixnerParams(c=0.5, beta=1.5, n=0), 400)
        assert report.within_bound

    def test_short_truncation_rejected(self):
        """Test that K below 50 is refused"""
        with pytest.raises(ValueError):
            orthogonality_residual(0, 0, MeixnerParams(c=0.5, beta=1.5, n=0), 10)

    def test_uncertified_tail(self):
        """Test that a short sum at large degree is not certified"""
        report = orthogonality_residual(40, 40, MeixnerParams(c=0.5, beta=1.5, n=0), 60)
        assert not report.certified


class TestConnection:
    """Test m_n(-x-beta; beta, 1/c) = c^n m_n(x; beta, c)"""

    def test_rational_points(self):
        """Test exact rational parameters"""
        for x in (Fraction(7, 3), Fraction(-11, 5), Fraction(100, 7)):
            assert connection_residual(5, Fraction(3, 2), Fraction(1, 2), x, 256) < 1e-60


class TestEscalation:
    """Test precision doubling"""

    def test_large_degree_converges(self):
        """Test pi_256(3 n - beta/2) reaches the tolerance"""
        value = scaled_monic_eval(MeixnerParams(c=0.5, beta=1.5, n=256), 3)
        assert value.converged
        assert value.achieved_rel_err <= 1e-20

    def test_cap_reached(self):
        """Test that a value that never settles raises in strict mode"""
        prec = PrecisionConfig(bits=128, max_bits=512, rel_tol=1e-20)
        counter = iter(range(100))

        def drifting(bits):
            return mp_context(bits).mpf(next(counter))

        with pytest.raises(OracleConvergenceError) as info:
            escalate(drifting, prec)
        assert info.value.bits == 512

    def test_soft_mode(self):
        """Test that soft mode returns an unconverged value"""
        prec = PrecisionConfig(bits=128, max_bits=256, rel_tol=1e-20)
        counter = iter(range(1, 100))
        value = escalate(lambda bits: mp_context(bits).mpf(next(counter)), prec, strict=False)
        assert not value.converged
        assert value.bits_used == 256


class TestOracleService:
    """Test the caching wrapper"""

    def test_cache(self, oracle):
        """Test that repeated requests are served from the cache"""
        p = MeixnerParams(c=0.5, beta=1.5, n=3)
        first = oracle.monic(p, 2.0)
        second = oracle.monic(p, 2.0)
        assert first is second
        assert len(oracle) == 1
        oracle.clear()
        assert len(oracle) == 0
