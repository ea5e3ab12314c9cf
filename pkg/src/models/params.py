"""Parameter Models"""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Side(str, Enum):
    """Side of a branch cut from which a one-sided limit is taken"""
    UPPER = "upper"
    LOWER = "lower"

    @property
    def sign(self) -> int:
        return 1 if self is Side.UPPER else -1


class HalfPlane(str, Enum):
    """Side of the imaginary axis"""
    RIGHT = "right"
    LEFT = "left"


class MeixnerParams(BaseModel):
    """
    Meixner polynomial parameters

    0 < c < 1, 1 <= beta < 2, n >= 0.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"c": 0.5, "beta": 1.5, "n": 100}},
    )

    c: float = Field(..., gt=0.0, lt=1.0)
    beta: float = Field(..., ge=1.0, lt=2.0)
    n: int = Field(..., ge=0)


class PrecisionConfig(BaseModel):
    """Extended-precision settings for the oracle"""

    model_config = ConfigDict(frozen=True)

    bits: int = Field(1024, ge=128)
    max_bits: int = 16384
    rel_tol: float = Field(1e-20, gt=0.0)

    @model_validator(mode="after")
    def check_cap(self) -> "PrecisionConfig":
        if self.max_bits < self.bits:
            raise ValueError("max_bits must be at least bits")
        return self


class TurningPoints(BaseModel):
    """Endpoints a < 1 < b of the oscillatory interval, with a*b = 1"""

    model_config = ConfigDict(frozen=True)

    a: float = Field(..., gt=0.0, lt=1.0)
    b: float = Field(..., gt=1.0)
    c: float = Field(..., gt=0.0, lt=1.0)

    @model_validator(mode="after")
    def check_product(self) -> "TurningPoints":
        if abs(self.a * self.b - 1.0) > 1e-12:
            raise ValueError("turning points must satisfy a*b = 1")
        return self


class CutSpec(BaseModel):
    """
    Branch choice for a fractional power: arg z is taken in
    (lower, lower + 2*pi]. The principal branch is lower = -pi.
    """

    model_config = ConfigDict(frozen=True)

    lower: float = -math.pi

    @field_validator("lower")
    @classmethod
    def finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("cut position must be finite")
        return v


PRINCIPAL = CutSpec()
