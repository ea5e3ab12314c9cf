"""Result Models"""

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import mpmath
from pydantic import BaseModel, ConfigDict, Field

from src.models.params import Side
from src.models.scaled import ScaledComplex


class RegionKind(str, Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


class Formula(str, Enum):
    EXTERIOR = "exterior"
    INTERIOR = "interior"


class RegionTag(BaseModel):
    """Position of z relative to the rectangle [0,1] x [-delta, delta]"""

    model_config = ConfigDict(frozen=True)

    kind: RegionKind
    delta: float = Field(..., gt=0.0)
    edge: Optional[str] = None  # left, right, top, bottom when on the boundary


class AuxValues(BaseModel):
    """Auxiliary quantities at one evaluation point"""

    model_config = ConfigDict(frozen=True)

    phi: Optional[complex] = None
    phi_tilde: Optional[complex] = None
    log_F: Optional[complex] = None
    log_F_tilde: Optional[complex] = None
    theta: complex
    v: complex
    l: float
    D: ScaledComplex
    W: Optional[complex] = None
    arg_checks_ok: bool = True

    @property
    def F(self) -> Optional[complex]:
        return None if self.log_F is None else ScaledComplex.from_log(self.log_F).to_complex()

    @property
    def F_tilde(self) -> Optional[complex]:
        if self.log_F_tilde is None:
            return None
        return ScaledComplex.from_log(self.log_F_tilde).to_complex()


class AsymptoticResult(BaseModel):
    """Asymptotic value of pi_n(n z - beta/2) with the data used to produce it"""

    model_config = ConfigDict(frozen=True)

    value: ScaledComplex
    # log of the local Airy envelope; set at real points inside (a, b) only
    log_envelope: Optional[float] = None
    formula: Formula
    region: RegionTag
    aux: AuxValues
    z: complex
    z_evaluated: complex
    side: Optional[Side] = None
    refined: bool = False


class OracleValue(BaseModel):
    """Extended-precision value with the precision that certified it"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Any
    achieved_rel_err: float
    bits_used: int
    converged: bool = True

    def scaled(self) -> ScaledComplex:
        v = self.value
        if v == 0:
            return ScaledComplex.zero()
        return ScaledComplex(
            log_mag=float(mpmath.log(abs(v))),
            phase=float(mpmath.arg(v)),
        )

    def to_complex(self) -> complex:
        return complex(self.value)


class AiryCoeffTable(BaseModel):
    """Coefficients u_s, v_s of the large-argument Airy expansion"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    u: Tuple[Fraction, ...]
    v: Tuple[Fraction, ...]

    @property
    def s_max(self) -> int:
        return len(self.u) - 1


class OrthogonalityReport(BaseModel):
    """Truncated orthogonality sum against its closed-form target"""

    model_config = ConfigDict(frozen=True)

    n: int
    p: int
    K: int
    target: float
    residual: float
    tail_bound: float
    rounding_allowance: float
    certified: bool
    within_bound: bool


class CheckResult(BaseModel):
    """One named verification check"""

    name: str
    passed: bool
    residual: float
    tolerance: float
    detail: Dict[str, Any] = Field(default_factory=dict)


class SuiteReport(BaseModel):
    """Outcome of one or more verification suites"""

    suite: str
    passed: bool
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class ConvergenceFit(BaseModel):
    """Least-squares fit log(err) = intercept - order * log(n)"""

    model_config = ConfigDict(frozen=True)

    order: float
    intercept: float
    residual: float
    n_values: List[int]
    errors: List[float]
    label: Optional[str] = None
