"""Tests for exponent-tracked complex values and the small models"""

import cmath
import math

import pytest
from pydantic import ValidationError

from src.models.matrix import Matrix2C
from src.models.params import MeixnerParams, PrecisionConfig, TurningPoints
from src.models.scaled import ScaledComplex, wrap_phase
from src.models.sweep import GridSpec, SweepSpec


class TestWrapPhase:
    """Test phase normalisation"""

    def test_minus_pi_maps_to_pi(self):
        """Test that -pi is folded onto +pi"""
        assert wrap_phase(-math.pi) == pytest.approx(math.pi)

    def test_large_angle(self):
        """Test that a multiple-turn angle lands in (-pi, pi]"""
        assert wrap_phase(7 * math.pi + 0.25) == pytest.approx(-math.pi + 0.25)


class TestScaledComplex:
    """Test ScaledComplex arithmetic"""

    def test_round_trip(self):
        """Test that ordinary values survive conversion"""
        z = complex(-3.5, 2.25)
        assert ScaledComplex.from_complex(z).to_complex() == pytest.approx(z)

    def test_zero(self):
        """Test the zero flag and its absorbing product"""
        zero = ScaledComplex.from_complex(0)
        assert zero.is_zero
        assert ScaledComplex.from_complex(5).mul(zero).is_zero
        assert ScaledComplex.from_log(complex(-math.inf, 0)).is_zero

    def test_product_beyond_double_range(self):
        """Test that 100^1000 * 100^-1000 stays exact"""
        big = ScaledComplex.from_log(1000 * math.log(100))
        small = ScaledComplex.from_log(-1000 * math.log(100))
        assert big.to_complex() == complex(math.inf, 0)
        assert big.mul(small).to_complex() == pytest.approx(1.0)

    def test_add_matches_complex(self):
        """Test that addition agrees with ordinary complex addition"""
        a, b = complex(1e3, -2), complex(-4, 0.5)
        total = ScaledComplex.from_complex(a).add(ScaledComplex.from_complex(b))
        assert total.to_complex() == pytest.approx(a + b)

    def test_cancellation(self):
        """Test that x - x collapses to (at most) rounding size"""
        x = ScaledComplex.from_complex(2.5)
        assert abs(x.sub(x).to_complex()) < 1e-14

    def test_operators(self):
        """Test the operator aliases"""
        a = ScaledComplex.from_complex(3j)
        b = ScaledComplex.from_complex(2)
        assert (a * b).to_complex() == pytest.approx(6j)
        assert (a / b).to_complex() == pytest.approx(1.5j)
        assert (-a).to_complex() == pytest.approx(-3j)

    def test_division_by_zero(self):
        """Test that division by zero raises"""
        with pytest.raises(ZeroDivisionError):
            ScaledComplex.one().div(ScaledComplex.zero())

    def test_rel_err_without_overflow(self):
        """Test rel_err between two huge values"""
        exact = ScaledComplex.from_log(5000.0)
        approx = ScaledComplex.from_log(5000.0 + math.log(1.01))
        assert approx.rel_err(exact) == pytest.approx(0.01)

    def test_conj(self):
        """Test conjugation flips the phase"""
        z = complex(1, 2)
        assert ScaledComplex.from_complex(z).conj().to_complex() == pytest.approx(z.conjugate())

    def test_decimal_string_huge(self):
        """Test decimal rendering of a value far beyond double range"""
        text = ScaledComplex.from_log(1000.5 * math.log(10)).decimal_string(6)
        assert text.endswith("e+1000")
        assert text.startswith("3.16")

    def test_invalid_phase(self):
        """Test that a non-finite phase is rejected"""
        with pytest.raises(ValidationError):
            ScaledComplex(log_mag=0.0, phase=math.nan)


class TestModels:
    """Test parameter and sweep validation"""

    def test_params_ranges(self):
        """Test that c and beta ranges are enforced"""
        MeixnerParams(c=0.5, beta=1.0, n=0)
        with pytest.raises(ValidationError):
            MeixnerParams(c=1.0, beta=1.5, n=3)
        with pytest.raises(ValidationError):
            MeixnerParams(c=0.5, beta=2.0, n=3)
        with pytest.raises(ValidationError):
            MeixnerParams(c=0.5, beta=1.5, n=-1)

    def test_precision_cap(self):
        """Test that max_bits below bits is rejected"""
        with pytest.raises(ValidationError):
            PrecisionConfig(bits=2048, max_bits=1024)

    def test_turning_point_product(self):
        """Test that a*b must be 1"""
        with pytest.raises(ValidationError):
            TurningPoints(a=0.5, b=3.0, c=0.5)

    def test_n_list_strictly_increasing(self):
        """Test the n_list invariant"""
        with pytest.raises(ValidationError):
            SweepSpec(c_list=[0.5], beta_list=[1.5], n_list=[64, 32])

    def test_sweep_param_ranges(self):
        """Test that sweep parameter lists are range-checked"""
        with pytest.raises(ValidationError):
            SweepSpec(c_list=[1.5], beta_list=[1.5], n_list=[32])

    def test_grid_row_major(self):
        """Test grid order: top row first, real part inner"""
        grid = GridSpec(re_min=0, re_max=1, im_min=-1, im_max=1, step=1)
        assert grid.points() == [
            complex(0, 1), complex(1, 1),
            complex(0, 0), complex(1, 0),
            complex(0, -1), complex(1, -1),
        ]

    def test_separate_im_step(self):
        """Test that im_step spaces the imaginary axis independently"""
        grid = GridSpec(re_min=0, re_max=2, im_min=-0.1, im_max=0.1, step=1, im_step=0.1)
        points = grid.points()
        assert len(points) == 9
        assert [p.imag for p in points[::3]] == pytest.approx([0.1, 0.0, -0.1])
        with pytest.raises(ValidationError):
            GridSpec(re_min=0, re_max=1, im_min=0, im_max=1, step=1, im_step=0)

    def test_empty_grid(self):
        """Test that an inverted rectangle has no points"""
        assert GridSpec(re_min=1, re_max=0, im_min=0, im_max=0, step=0.5).points() == []


class TestMatrix2C:
    """Test the 2x2 matrix helper"""

    def test_product_and_inverse(self):
        """Test that M M^-1 is the identity"""
        m = Matrix2C.from_rows([[1, 2j], [3, 4 - 1j]])
        eye = m.matmul(m.inv())
        assert eye.sub(Matrix2C.identity()).max_abs() < 1e-14

    def test_det(self):
        """Test the determinant"""
        m = Matrix2C.from_rows([[2, 1], [1j, 3]])
        assert m.det() == pytest.approx(6 - 1j)

    def test_operators(self):
        """Test @ and - aliases"""
        d = Matrix2C.diag(2, cmath.exp(1j))
        assert (d @ d).m22 == pytest.approx(cmath.exp(2j))
        assert (d - d).max_abs() == 0.0
