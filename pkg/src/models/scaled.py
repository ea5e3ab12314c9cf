"""Exponent-tracked complex values"""

from __future__ import annotations

import cmath
import math
from typing import Union

from pydantic import BaseModel, ConfigDict, field_validator

Number = Union[complex, float, int]


def wrap_phase(phase: float) -> float:
    """Reduce an angle into (-pi, pi]; -pi maps to +pi"""
    wrapped = math.remainder(phase, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


class ScaledComplex(BaseModel):
    """
    A complex number stored as exp(log_mag + i*phase)

    Products are exact additions of log magnitudes, so factors such as
    n^n or e^{n v / 2} never materialise as floats. Zero is a separate
    flag because its log magnitude is not finite.
    """

    model_config = ConfigDict(frozen=True)

    log_mag: float = 0.0
    phase: float = 0.0
    is_zero: bool = False

    @field_validator("phase")
    @classmethod
    def normalise_phase(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("phase must be finite")
        return wrap_phase(v)

    # Construction

    @classmethod
    def zero(cls) -> "ScaledComplex":
        return cls(log_mag=-math.inf, phase=0.0, is_zero=True)

    @classmethod
    def one(cls) -> "ScaledComplex":
        return cls()

    @classmethod
    def from_complex(cls, z: Number) -> "ScaledComplex":
        z = complex(z)
        if z == 0:
            return cls.zero()
        return cls(log_mag=math.log(abs(z)), phase=cmath.phase(z))

    @classmethod
    def from_log(cls, w: Number) -> "ScaledComplex":
        """Value exp(w) for a complex logarithm w"""
        w = complex(w)
        if w.real == -math.inf:
            return cls.zero()
        return cls(log_mag=w.real, phase=w.imag)

    # Arithmetic

    def mul(self, other: "ScaledComplex") -> "ScaledComplex":
        if self.is_zero or other.is_zero:
            return ScaledComplex.zero()
        return ScaledComplex(
            log_mag=self.log_mag + other.log_mag,
            phase=self.phase + other.phase,
        )

    def div(self, other: "ScaledComplex") -> "ScaledComplex":
        if other.is_zero:
            raise ZeroDivisionError("division by a zero ScaledComplex")
        if self.is_zero:
            return ScaledComplex.zero()
        return ScaledComplex(
            log_mag=self.log_mag - other.log_mag,
            phase=self.phase - other.phase,
        )

    def add(self, other: "ScaledComplex") -> "ScaledComplex":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        big, small = (self, other) if self.log_mag >= other.log_mag else (other, self)
        ratio = cmath.exp(
            complex(small.log_mag - big.log_mag, small.phase - big.phase)
        )
        s = 1.0 + ratio
        if s == 0:
            return ScaledComplex.zero()
        return ScaledComplex(
            log_mag=big.log_mag + math.log(abs(s)),
            phase=big.phase + cmath.phase(s),
        )

    def neg(self) -> "ScaledComplex":
        if self.is_zero:
            return self
        return ScaledComplex(log_mag=self.log_mag, phase=self.phase + math.pi)

    def sub(self, other: "ScaledComplex") -> "ScaledComplex":
        return self.add(other.neg())

    def conj(self) -> "ScaledComplex":
        if self.is_zero:
            return self
        return ScaledComplex(log_mag=self.log_mag, phase=-self.phase)

    __mul__ = mul
    __truediv__ = div
    __add__ = add
    __sub__ = sub
    __neg__ = neg

    # Conversion

    def log(self) -> complex:
        """Complex logarithm with the stored phase as imaginary part"""
        if self.is_zero:
            raise ValueError("log of zero")
        return complex(self.log_mag, self.phase)

    def to_complex(self) -> complex:
        """Ordinary complex value; inf/0 when the magnitude is out of range"""
        if self.is_zero:
            return 0j
        if self.log_mag > 709.0:
            mag = math.inf
        else:
            mag = math.exp(self.log_mag)
        re, im = math.cos(self.phase), math.sin(self.phase)
        return complex(mag * re if re else 0.0, mag * im if im else 0.0)

    def rel_err(self, exact: "ScaledComplex") -> float:
        """|self / exact - 1| computed without forming either value"""
        if exact.is_zero:
            return 0.0 if self.is_zero else math.inf
        if self.is_zero:
            return 1.0
        d = self.log_mag - exact.log_mag
        if d > 700.0:
            return math.inf
        ratio = cmath.exp(complex(d, self.phase - exact.phase))
        return abs(ratio - 1.0)

    def decimal_string(self, digits: int = 17) -> str:
        """Scientific notation that survives magnitudes beyond float range"""
        if self.is_zero:
            return "0"
        log10 = self.log_mag / math.log(10.0)
        exponent = math.floor(log10)
        mantissa = 10.0 ** (log10 - exponent)
        re = mantissa * math.cos(self.phase)
        im = mantissa * math.sin(self.phase)
        if abs(im) <= 1e-15 * mantissa:
            return f"{re:.{digits}g}e{exponent:+d}"
        if abs(re) <= 1e-15 * mantissa:
            return f"{im:.{digits}g}e{exponent:+d}j"
        sign = "+" if im >= 0 else "-"
        return f"({re:.{digits}g}{sign}{abs(im):.{digits}g}j)e{exponent:+d}"
