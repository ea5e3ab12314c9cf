"""Sweep Models"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.models.params import PrecisionConfig


class OutputFormat(str, Enum):
    CSV = "csv"
    JSONL = "jsonl"


class GridSpec(BaseModel):
    """
    Rectangle re_min..re_max x im_min..im_max sampled on a lattice

    step spaces the real axis; the imaginary axis uses im_step when
    given, else the same step.
    """

    model_config = ConfigDict(frozen=True)

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    step: float = Field(..., gt=0.0)
    im_step: Optional[float] = Field(None, gt=0.0)

    @staticmethod
    def axis(lo: float, hi: float, step: float) -> List[float]:
        if hi < lo:
            return []
        count = int((hi - lo) / step + 1e-9) + 1
        return [lo + k * step for k in range(count)]

    def points(self) -> List[complex]:
        """Row-major: imaginary part outer (top row first), real part inner"""
        reals = self.axis(self.re_min, self.re_max, self.step)
        imags = list(reversed(self.axis(self.im_min, self.im_max, self.im_step or self.step)))
        return [complex(x, y) for y in imags for x in reals]


class SweepSpec(BaseModel):
    """Everything a comparison sweep needs"""

    c_list: List[float] = Field(..., min_length=1)
    beta_list: List[float] = Field(..., min_length=1)
    n_list: List[int] = Field(..., min_length=1)
    points: List[complex] = Field(default_factory=list)
    delta: Optional[float] = Field(None, gt=0.0)
    precision: PrecisionConfig = Field(default_factory=PrecisionConfig)
    refined: bool = False

    @field_validator("n_list")
    @classmethod
    def strictly_increasing(cls, v: List[int]) -> List[int]:
        if any(n < 0 for n in v):
            raise ValueError("n must be non-negative")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("n_list must be strictly increasing")
        return v

    @model_validator(mode="after")
    def check_params(self) -> "SweepSpec":
        for c in self.c_list:
            if not 0.0 < c < 1.0:
                raise ValueError(f"c must lie in (0, 1), got {c}")
        for beta in self.beta_list:
            if not 1.0 <= beta < 2.0:
                raise ValueError(f"beta must lie in [1, 2), got {beta}")
        return self


class CompareRow(BaseModel):
    """One (params, n, z) comparison of the asymptotic value against the oracle"""

    n: int
    c: float
    beta: float
    re_z: float
    im_z: float
    formula_used: str
    log_abs_exact: float
    log_abs_asym: float
    phase_exact: float
    phase_asym: float
    rel_err: float


class RegionRow(BaseModel):
    """One grid point of a region map"""

    re_z: float
    im_z: float
    region: str
    a: float
    b: float
