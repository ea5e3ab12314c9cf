"""
Special-function kernel

Branch-aware powers, complex log-gamma and the complex Airy functions,
in double precision (scipy.special) with extended-precision twins
(mpmath) used for cross-checks and by the oracle.
"""

import cmath
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Tuple

import structlog
from mpmath.ctx_mp import MPContext
from scipy import special

from src.models.params import PRINCIPAL, CutSpec, Side
from src.models.results import AiryCoeffTable
from src.models.scaled import ScaledComplex
from src.utils.config import settings
from src.utils.errors import BranchError, DomainError, PoleError

logger = structlog.get_logger()

OMEGA = cmath.exp(2j * math.pi / 3)
SQRT_PI = math.sqrt(math.pi)

# Above this |Re zeta| the unscaled Airy values leave double range
_SCALE_SWITCH = 100.0

_local = threading.local()


def mp_context(bits: int) -> MPContext:
    """Per-thread mpmath context fixed at the given precision"""
    contexts = getattr(_local, "contexts", None)
    if contexts is None:
        contexts = _local.contexts = {}
    ctx = contexts.get(bits)
    if ctx is None:
        ctx = MPContext()
        ctx.prec = bits
        contexts[bits] = ctx
    return ctx


def branch_pow(z: complex, alpha: float, cut: CutSpec = PRINCIPAL) -> complex:
    """
    z**alpha with arg z taken in (cut.lower, cut.lower + 2*pi]

    Raises:
        DomainError: z == 0 with a negative exponent
    """
    z = complex(z)
    if z == 0:
        if alpha < 0:
            raise DomainError(f"0 raised to negative power {alpha}")
        return 1 + 0j if alpha == 0 else 0j
    arg = cmath.phase(z)
    if arg == -math.pi and _cut_on_negative_axis(cut):
        # phase() rounds points just below the negative axis to -pi; keep them below
        arg = cut.lower
    else:
        arg += 2.0 * math.pi * (math.floor((cut.lower - arg) / (2.0 * math.pi)) + 1)
    return cmath.exp(alpha * complex(math.log(abs(z)), arg))


def _cut_on_negative_axis(cut: CutSpec) -> bool:
    return math.isclose(math.remainder(cut.lower - math.pi, 2.0 * math.pi), 0.0, abs_tol=1e-12)


def side_cut(side: Side) -> CutSpec:
    """Cut that puts the negative real axis at arg = +pi (upper) or -pi (lower)"""
    return CutSpec(lower=-math.pi / 2) if side is Side.UPPER else CutSpec(lower=-1.5 * math.pi)


def _is_pole(w: complex) -> bool:
    return w.imag == 0 and w.real <= 0 and w.real == math.floor(w.real)


def log_gamma(w: Any, bits: Optional[int] = None) -> Any:
    """
    Principal branch of log Gamma(w)

    With bits=None the double-precision scipy routine is used; otherwise
    the value is an mpmath number at the requested precision.

    Raises:
        PoleError: w is a non-positive integer
    """
    if _is_pole(complex(w)):
        raise PoleError(f"log_gamma pole at {w}")
    if bits is None:
        return complex(special.loggamma(complex(w)))
    ctx = mp_context(bits)
    return ctx.loggamma(ctx.convert(w))


def airy_quartet(z: complex) -> Tuple[complex, complex, complex, complex]:
    """(Ai, Ai', Bi, Bi') at z in double precision"""
    ai, aip, bi, bip = special.airy(complex(z))
    return complex(ai), complex(aip), complex(bi), complex(bip)


def airy_quartet_mp(z: Any, bits: int) -> Tuple[Any, Any, Any, Any]:
    """(Ai, Ai', Bi, Bi') at z in extended precision"""
    ctx = mp_context(bits)
    z = ctx.convert(z)
    return (
        ctx.airyai(z),
        ctx.airyai(z, derivative=1),
        ctx.airybi(z),
        ctx.airybi(z, derivative=1),
    )


def airy_zeta(z: complex) -> complex:
    """zeta = (2/3) z^{3/2}, principal power"""
    z = complex(z)
    return (2.0 / 3.0) * z * cmath.sqrt(z)


def airy_scaled(
    z: complex, side: Optional[Side] = None
) -> Tuple[complex, complex, complex, complex]:
    """
    (Ai e^{zeta}, Ai' e^{zeta}, Bi e^{-zeta}, Bi' e^{-zeta})

    On the negative real axis zeta depends on the side from which the
    axis is approached, so a side is required there.
    """
    z = complex(z)
    if z.imag == 0 and z.real < 0:
        if side is None:
            raise BranchError(f"airy_scaled on the cut at {z} needs a side")
        zeta = (2.0 / 3.0) * branch_pow(z, 1.5, side_cut(side))
    else:
        zeta = airy_zeta(z)

    if abs(zeta.real) <= _SCALE_SWITCH:
        ai, aip, bi, bip = airy_quartet(z)
        up, down = cmath.exp(zeta), cmath.exp(-zeta)
        return ai * up, aip * up, bi * down, bip * down

    eai, eaip, ebi, ebip = special.airye(z)
    fix = cmath.exp(abs(zeta.real) - zeta)
    return complex(eai), complex(eaip), complex(ebi) * fix, complex(ebip) * fix


def airy_ai_scaled(w: complex) -> Tuple[ScaledComplex, ScaledComplex]:
    """Ai(w) and Ai'(w) in exponent-tracked form for any finite w"""
    w = complex(w)
    zeta = airy_zeta(w)
    if abs(zeta.real) <= _SCALE_SWITCH:
        ai, aip, _, _ = airy_quartet(w)
        return ScaledComplex.from_complex(ai), ScaledComplex.from_complex(aip)
    eai, eaip, _, _ = special.airye(w)
    factor = ScaledComplex.from_log(-zeta)
    return (
        ScaledComplex.from_complex(complex(eai)).mul(factor),
        ScaledComplex.from_complex(complex(eaip)).mul(factor),
    )


def airy_modulus(w: complex) -> Tuple[float, float]:
    """
    Airy modulus functions sqrt(|Ai|^2 + |Bi|^2) and sqrt(|Ai'|^2 + |Bi'|^2)

    On the negative axis they bound |cos t Ai - sin t Bi| and its
    derivative for every real t, which makes them the local envelope of
    an oscillating Airy combination.

    Raises:
        DomainError: Bi would leave double range at w
    """
    w = complex(w)
    if abs(airy_zeta(w).real) > _SCALE_SWITCH:
        raise DomainError(f"Airy modulus at {w} is outside the oscillatory range")
    ai, aip, bi, bip = airy_quartet(w)
    return math.hypot(abs(ai), abs(bi)), math.hypot(abs(aip), abs(bip))


@lru_cache(maxsize=None)
def airy_coeffs(s_max: int) -> AiryCoeffTable:
    """
    Exact coefficients u_s, v_s, s = 0..s_max

    u_s = u_{s-1} (6s-5)(6s-3)(6s-1) / (216 s (2s-1)),
    v_s = -(6s+1)/(6s-1) u_s.
    """
    if not 0 <= s_max <= 30:
        raise DomainError(f"s_max must lie in [0, 30], got {s_max}")
    u = [Fraction(1)]
    v = [Fraction(1)]
    for s in range(1, s_max + 1):
        us = u[-1] * Fraction((6 * s - 5) * (6 * s - 3) * (6 * s - 1), 216 * s * (2 * s - 1))
        u.append(us)
        v.append(-Fraction(6 * s + 1, 6 * s - 1) * us)
    return AiryCoeffTable(u=tuple(u), v=tuple(v))


def airy_asymptotic(z: complex, terms: Optional[int] = None) -> Tuple[complex, complex]:
    """
    Large-|z| expansion of (Ai, Ai') for |arg z| < pi

    With terms=None the series stops before its smallest term starts
    growing, capped at AIRY_SERIES_TERMS terms.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("asymptotic Airy expansion needs z != 0")
    cap = settings.AIRY_SERIES_TERMS if terms is None else terms
    table = airy_coeffs(max(cap, 1))
    zeta = airy_zeta(z)
    inv = 1.0 / zeta

    sum_u = 0j
    sum_v = 0j
    prev = math.inf
    power = 1 + 0j
    for s in range(cap):
        tu = (-1) ** s * float(table.u[s]) * power
        tv = (-1) ** s * float(table.v[s]) * power
        if terms is None and abs(tu) > prev:
            break
        sum_u += tu
        sum_v += tv
        prev = abs(tu)
        power *= inv

    quarter = branch_pow(z, 0.25)
    lead = cmath.exp(-zeta) / (2.0 * SQRT_PI)
    return lead / quarter * sum_u, -lead * quarter * sum_v
