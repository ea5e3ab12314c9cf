"""
Asymptotic core

Auxiliary functions (turning points, phase functions, Airy arguments,
the D and W gamma-ratio factors) and the exterior/interior formulas for
pi_n(n z - beta/2). Every factor carrying n in an exponent is kept in
ScaledComplex form.
"""

import cmath
import math
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple

import structlog
from scipy import integrate
from scipy.special import logsumexp

from src.models.params import HalfPlane, MeixnerParams, Side, TurningPoints
from src.models.results import (
    AsymptoticResult,
    AuxValues,
    Formula,
    RegionKind,
    RegionTag,
)
from src.models.scaled import ScaledComplex
from src.services.special_kernel import OMEGA, airy_ai_scaled, airy_modulus, log_gamma
from src.utils.config import settings
from src.utils.errors import BranchError, DomainError, SingularPointError

logger = structlog.get_logger()

# Offset that moves a real argument just off its branch cut
_CUT_NUDGE = 1e-200
_ARG_TOL = 1e-12

_OMEGA2 = OMEGA * OMEGA
_LOG_OMEGA = ScaledComplex.from_complex(OMEGA)
_LOG_OMEGA2 = ScaledComplex.from_complex(_OMEGA2)


# Turning points and constants

def turning_points(c: float) -> TurningPoints:
    """a = (1 - sqrt c)/(1 + sqrt c), b = 1/a"""
    if not 0.0 < c < 1.0:
        raise DomainError(f"c must lie in (0, 1), got {c}")
    r = math.sqrt(c)
    return TurningPoints(a=(1.0 - r) / (1.0 + r), b=(1.0 + r) / (1.0 - r), c=c)


def rational_turning_points(c: Fraction) -> Tuple[Fraction, Fraction]:
    """Exact (a, b) when sqrt(c) is rational"""
    c = Fraction(c)
    if not 0 < c < 1:
        raise DomainError(f"c must lie in (0, 1), got {c}")
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn != c.numerator or rd * rd != c.denominator:
        raise DomainError(f"sqrt({c}) is not rational")
    r = Fraction(rn, rd)
    return (1 - r) / (1 + r), (1 + r) / (1 - r)


def default_delta(tp: TurningPoints) -> float:
    return min(0.1, tp.a / 2.0)


def resolve_delta(tp: TurningPoints, delta: Optional[float] = None) -> float:
    if delta is not None:
        return delta
    if settings.ASYM_DELTA is not None:
        return settings.ASYM_DELTA
    return default_delta(tp)


def theta(z: complex, n: int, beta: float) -> complex:
    return n * math.pi * complex(z) - beta * math.pi / 2.0


def v_func(z: complex, c: float) -> complex:
    return -complex(z) * math.log(c)


def l_const(tp: TurningPoints) -> float:
    return 2.0 * math.log((tp.b - tp.a) / 4.0) - 2.0


# Phase functions

def _on_side(z: complex, side: Optional[Side]) -> complex:
    if z.imag == 0 and side is not None:
        return complex(z.real, side.sign * _CUT_NUDGE)
    return z


def _sign(z: complex) -> int:
    return (z.imag > 0) - (z.imag < 0)


def _log_ratio(big: complex, small: complex) -> complex:
    """log((big + small) / (big - small)) as 2 atanh(small / big)"""
    if big == 0:
        return cmath.log((big + small) / (big - small))
    return 2.0 * cmath.atanh(small / big)


def _phi_prime_raw(w: complex, tp: TurningPoints) -> complex:
    # b w - 1 = b (w - a) and a w - 1 = a (w - b) since ab = 1
    s1 = cmath.sqrt(tp.b * (w - tp.a))
    s2 = cmath.sqrt(tp.a * (w - tp.b))
    return _log_ratio(s1, s2)


def _phi_raw(w: complex, tp: TurningPoints) -> complex:
    t1 = cmath.sqrt(w - tp.a)
    t2 = cmath.sqrt(w - tp.b)
    return w * _phi_prime_raw(w, tp) - _log_ratio(t1, t2)


def _phi_tilde_raw(w: complex, tp: TurningPoints) -> complex:
    u1 = cmath.sqrt(1 - tp.a * w)
    u2 = cmath.sqrt(1 - tp.b * w)
    r1 = cmath.sqrt(tp.b - w)
    r2 = cmath.sqrt(tp.a - w)
    return w * cmath.log((u1 + u2) / (u1 - u2)) - cmath.log((r1 + r2) / (r1 - r2))


def phi(z: complex, tp: TurningPoints, side: Optional[Side] = None) -> complex:
    """
    phi(z), analytic off (-inf, b]

    Raises:
        BranchError: z real and below b with no side given
    """
    z = complex(z)
    if z.imag == 0 and z.real <= tp.b:
        if z.real == tp.b:
            return 0j
        if side is None:
            raise BranchError(f"phi({z.real}) lies on its cut; pass a side")
    return _phi_raw(_on_side(z, side), tp)


def phi_tilde(z: complex, tp: TurningPoints, side: Optional[Side] = None) -> complex:
    """
    phi~(z), analytic off (-inf, 0] and [a, inf)

    Raises:
        BranchError: z real and on either cut with no side given
    """
    z = complex(z)
    if z.imag == 0 and (z.real <= 0 or z.real >= tp.a):
        if z.real == tp.a:
            return 0j
        if side is None:
            raise BranchError(f"phi_tilde({z.real}) lies on its cut; pass a side")
    return _phi_tilde_raw(_on_side(z, side), tp)


def phi_prime(z: complex, tp: TurningPoints, side: Optional[Side] = None) -> complex:
    z = complex(z)
    if z.imag == 0 and z.real < tp.b and side is None:
        raise BranchError(f"phi_prime({z.real}) lies on its cut; pass a side")
    return _phi_prime_raw(_on_side(z, side), tp)


def phi_by_quadrature(z: complex, tp: TurningPoints, side: Optional[Side] = None) -> complex:
    """Integral of phi' from b to z along the straight segment"""
    w = _on_side(complex(z), side)
    if w.imag == 0 and w.real < tp.b:
        raise BranchError(f"quadrature path to {w.real} runs along the cut; pass a side")
    span = w - tp.b

    def integrand(t: float, part: int) -> float:
        value = _phi_prime_raw(tp.b + t * span, tp) * span
        return value.real if part == 0 else value.imag

    opts = dict(limit=200, epsabs=1e-13, epsrel=1e-12)
    re, _ = integrate.quad(integrand, 0.0, 1.0, args=(0,), **opts)
    im, _ = integrate.quad(integrand, 0.0, 1.0, args=(1,), **opts)
    return complex(re, im)


def re_phi_estimate(x: float, tp: TurningPoints, delta: float, side: Side = Side.UPPER) -> Tuple[float, float]:
    """
    (Re phi(x +- i delta), its small-delta estimate) for x >= 0

    The estimate is phi(x) beyond b, a linear decay across the
    oscillatory band and phi~(x) - pi delta below a.
    """
    if x < 0:
        raise DomainError("re_phi_estimate needs x >= 0")
    actual = _phi_raw(complex(x, side.sign * delta), tp).real
    if x >= tp.b:
        estimate = phi(x, tp).real
    elif x > tp.a:
        estimate = -2.0 * delta * math.atan(math.sqrt((1 - tp.a * x) / (tp.b * x - 1)))
    else:
        estimate = phi_tilde(x, tp, side).real - math.pi * delta
    return actual, estimate


# Airy arguments

def _log_airy_arg(q: complex, n: int, s: int, tilde: bool) -> complex:
    """
    log [1.5 n q]^{2/3} with arg q continued across the negative axis

    For F (tilde=False) arg F lies in (0, pi] above the axis and in
    [-pi, 0) below it; for F~ the ranges are mirrored.
    """
    if q == 0:
        return complex(-math.inf, 0.0)
    p = cmath.phase(q)
    quarter = math.pi / 4
    if not tilde:
        if s > 0 and p < -quarter:
            p += 2 * math.pi
        elif s < 0 and p > quarter:
            p -= 2 * math.pi
    else:
        if s > 0 and p > quarter:
            p -= 2 * math.pi
        elif s < 0 and p < -quarter:
            p += 2 * math.pi
    return (2.0 / 3.0) * complex(math.log(1.5 * n * abs(q)), p)


def _check_arg_ranges(
    w: complex,
    log_F: Optional[complex],
    log_F_tilde: Optional[complex],
    tp: TurningPoints,
    delta: float,
    strict: bool,
) -> bool:
    """Arg ranges of F and F~; inside the oscillatory band both are pinned away from the positive axis"""
    in_band = tp.a < w.real < tp.b and abs(w.imag) <= delta
    s = 1 if w.imag >= 0 else -1
    ok = True
    for name, lg, flip in (("F", log_F, 1), ("F_tilde", log_F_tilde, -1)):
        if lg is None or lg.real == -math.inf:
            continue
        arg = lg.imag
        if in_band:
            value = flip * s * arg
            good = math.pi / 3 - _ARG_TOL < value <= math.pi + _ARG_TOL
        else:
            good = abs(arg) <= math.pi + _ARG_TOL
        if not good:
            ok = False
            logger.warning("airy_arg_out_of_range", arg=name, z=str(w), value=arg, in_band=in_band)
            if strict:
                raise BranchError(f"arg {name} = {arg} outside its range at z = {w}")
    return ok


def airy_log_args(
    z: complex,
    n: int,
    tp: TurningPoints,
    side: Optional[Side] = None,
    delta: Optional[float] = None,
    strict: bool = False,
) -> Tuple[Optional[complex], Optional[complex], bool]:
    """
    (log F, log F~, range checks passed)

    A component whose phase function has a cut through a real z is
    None unless a side is given.
    """
    z = complex(z)
    try:
        ph = phi(z, tp, side)
    except BranchError:
        ph = None
    try:
        pht = phi_tilde(z, tp, side)
    except BranchError:
        pht = None
    if ph is None and pht is None:
        raise BranchError(f"neither Airy argument is defined at {z} without a side")

    w = _on_side(z, side)
    s = _sign(w)
    log_F = None if ph is None else _log_airy_arg(ph, n, s, tilde=False)
    log_Ft = None if pht is None else _log_airy_arg(-pht, n, s, tilde=True)
    ok = _check_arg_ranges(w, log_F, log_Ft, tp, resolve_delta(tp, delta), strict)
    return log_F, log_Ft, ok


def airy_args(
    z: complex,
    n: int,
    tp: TurningPoints,
    side: Optional[Side] = None,
    delta: Optional[float] = None,
    strict: bool = False,
) -> Tuple[Optional[complex], Optional[complex]]:
    """F = [3/2 n phi]^{2/3} and F~ = [-3/2 n phi~]^{2/3}"""
    log_F, log_Ft, _ = airy_log_args(z, n, tp, side, delta, strict)

    def value(lg: Optional[complex]) -> Optional[complex]:
        return None if lg is None else ScaledComplex.from_log(lg).to_complex()

    return value(log_F), value(log_Ft)


# Gamma-ratio factors

def d_factor(z: complex, n: int, beta: float, half_plane: Optional[HalfPlane] = None) -> ScaledComplex:
    """
    D(z), evaluated in log space

    On the imaginary axis the half-plane whose formula applies must be
    named.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("D is undefined at z = 0")
    if half_plane is None:
        if z.real > 0:
            half_plane = HalfPlane.RIGHT
        elif z.real < 0:
            half_plane = HalfPlane.LEFT
        else:
            raise BranchError(f"D on the imaginary axis at {z} needs a half-plane")
    u = n * z
    if half_plane is HalfPlane.RIGHT:
        log_d = (
            u
            + log_gamma(u - beta / 2 + 1)
            - 0.5 * math.log(2 * math.pi)
            - (u + (1 - beta) / 2) * cmath.log(u)
        )
    else:
        log_d = (
            0.5 * math.log(2 * math.pi)
            + (-u + (beta - 1) / 2) * cmath.log(-u)
            + u
            - log_gamma(-u + beta / 2)
        )
    return ScaledComplex.from_log(log_d)


def w_factor(z: complex, n: int, beta: float) -> complex:
    """W(z) = (nz)^{1-beta} Gamma(nz + beta/2) / Gamma(nz + 1 - beta/2)"""
    z = complex(z)
    if z == 0 or (z.imag == 0 and z.real < 0):
        raise DomainError(f"W is undefined on the closed negative axis, got {z}")
    u = n * z
    return cmath.exp(
        (1 - beta) * cmath.log(u) + log_gamma(u + beta / 2) - log_gamma(u + 1 - beta / 2)
    )


def dw_combination(z: complex, n: int, beta: float) -> complex:
    """D^{-2} W^{-1} - 1"""
    d = d_factor(z, n, beta)
    return cmath.exp(-2 * d.log()) / w_factor(z, n, beta) - 1


# Identities

def phase_identity_residual(z: complex, tp: TurningPoints) -> float:
    """|phi~ - phi -+ i pi (1 - z)| off the real axis"""
    z = complex(z)
    if z.imag == 0:
        raise DomainError("phase identity is stated off the real axis")
    s = _sign(z)
    return abs(_phi_tilde_raw(z, tp) - _phi_raw(z, tp) - s * 1j * math.pi * (1 - z))


def exponential_relation_residual(
    z: complex, n: int, tp: TurningPoints, beta: float, side: Optional[Side] = None
) -> float:
    """|e^{n phi~} / ((-1)^n e^{n phi -+ i theta -+ i pi beta/2}) - 1|"""
    w = _on_side(complex(z), side)
    s = _sign(w)
    if s == 0:
        raise BranchError("exponential relation on the real axis needs a side")
    lhs = n * _phi_tilde_raw(w, tp)
    rhs = n * _phi_raw(w, tp) - s * 1j * theta(w, n, beta) - s * 1j * math.pi * beta / 2 + 1j * math.pi * n
    return abs(cmath.exp(lhs - rhs) - 1)


# Regions

def classify_region(z: complex, delta: float, tol: Optional[float] = None) -> RegionTag:
    """Tag z against the rectangle [0, 1] x [-delta, delta]"""
    if delta <= 0:
        raise DomainError(f"delta must be positive, got {delta}")
    tol = settings.BOUNDARY_TOL if tol is None else tol
    z = complex(z)
    x, y = z.real, z.imag

    if 0 <= x <= 1 and -delta <= y <= delta:
        gaps = {"left": x, "right": 1 - x, "top": delta - y, "bottom": delta + y}
        edge = min(gaps, key=gaps.get)
        if gaps[edge] <= tol:
            return RegionTag(kind=RegionKind.BOUNDARY, delta=delta, edge=edge)
        return RegionTag(kind=RegionKind.INSIDE, delta=delta)

    gaps = {"left": -x, "right": x - 1, "top": y - delta, "bottom": -delta - y}
    dx = max(gaps["left"], gaps["right"], 0.0)
    dy = max(gaps["top"], gaps["bottom"], 0.0)
    if math.hypot(dx, dy) <= tol:
        edge = max(gaps, key=gaps.get)
        return RegionTag(kind=RegionKind.BOUNDARY, delta=delta, edge=edge)
    return RegionTag(kind=RegionKind.OUTSIDE, delta=delta)


# Formulas

def _require_n(n: int) -> None:
    if n < 1:
        raise DomainError("asymptotic formulas need n >= 1")


def _check_exact_singular(z: complex, tp: TurningPoints) -> None:
    if z == 0 or z == tp.a or z == tp.b:
        raise SingularPointError(f"z = {z} is a singular point of the formulas")


def _aux(
    w: complex, p: MeixnerParams, tp: TurningPoints, D: ScaledComplex, ok: bool
) -> AuxValues:
    s = _sign(w)
    ph = _phi_raw(w, tp)
    pht = _phi_tilde_raw(w, tp)
    try:
        W = w_factor(w, p.n, p.beta)
    except DomainError:
        W = None
    return AuxValues(
        phi=ph,
        phi_tilde=pht,
        log_F=_log_airy_arg(ph, p.n, s, tilde=False),
        log_F_tilde=_log_airy_arg(-pht, p.n, s, tilde=True),
        theta=theta(w, p.n, p.beta),
        v=v_func(w, p.c),
        l=l_const(tp),
        D=D,
        W=W,
        arg_checks_ok=ok,
    )


def _prefactor(w: complex, p: MeixnerParams, tp: TurningPoints, alternating: bool) -> ScaledComplex:
    """n^n (or (-n)^n) sqrt(pi) e^{n v/2 + n l/2}"""
    n = p.n
    log_pref = (
        n * math.log(n)
        + 0.5 * math.log(math.pi)
        + n * v_func(w, p.c) / 2
        + n * l_const(tp) / 2
    )
    if alternating:
        log_pref += 1j * math.pi * n
    return ScaledComplex.from_log(log_pref)


def _bracket_weights(
    big: complex, small: complex, log_denom: complex, log_arg: complex, beta: float
) -> Tuple[ScaledComplex, ScaledComplex]:
    """((P^b + M^b) / (denom F^{-1/4}), (P^b - M^b) / (denom F^{1/4}))"""
    pb = cmath.exp(beta * cmath.log(big))
    mb = cmath.exp(beta * cmath.log(small))
    t1 = ScaledComplex.from_complex(pb + mb).mul(ScaledComplex.from_log(-log_denom + log_arg / 4))
    t2 = ScaledComplex.from_complex(pb - mb).mul(ScaledComplex.from_log(-log_denom - log_arg / 4))
    return t1, t2


def _default_side(z: complex, side: Optional[Side]) -> Optional[Side]:
    if z.imag != 0:
        return None
    return side or Side.UPPER


def in_band(z: complex, tp: TurningPoints) -> bool:
    """z is real and strictly inside the oscillatory band (a, b)"""
    z = complex(z)
    return z.imag == 0 and tp.a < z.real < tp.b


def zero_spacing(x: float, tp: TurningPoints, n: int) -> float:
    """Local spacing of the real zeros of pi_n(n x - beta/2) near x in (a, b)"""
    if not tp.a < x < tp.b:
        raise DomainError(f"x = {x} is not inside (a, b)")
    slope = 2.0 * math.atan(math.sqrt((1 - tp.a * x) / (tp.b * x - 1)))
    return math.pi / slope / n


def _log_envelope(
    z: complex,
    tp: TurningPoints,
    scale: ScaledComplex,
    t1: ScaledComplex,
    t2: ScaledComplex,
    arg: complex,
) -> Optional[float]:
    """log |scale| (|t1| M(arg) + |t2| N(arg)) at real points of the band, else None"""
    if not in_band(z, tp):
        return None
    try:
        m, dm = airy_modulus(arg)
    except DomainError:
        return None
    terms = [t.log_mag + math.log(size) for t, size in ((t1, m), (t2, dm)) if not t.is_zero and size > 0]
    if not terms:
        return None
    return scale.log_mag + float(logsumexp(terms))


def asym_outside(
    z: complex,
    p: MeixnerParams,
    side: Optional[Side] = None,
    delta: Optional[float] = None,
    strict: bool = False,
) -> AsymptoticResult:
    """
    Exterior formula for pi_n(n z - beta/2)

    Real arguments are evaluated as one-sided limits (from above unless
    a side is given); off the axis the side is ignored.

    Raises:
        SingularPointError: z is exactly 0, a or b
    """
    z = complex(z)
    _require_n(p.n)
    tp = turning_points(p.c)
    _check_exact_singular(z, tp)
    delta = resolve_delta(tp, delta)
    side = _default_side(z, side)
    w = _on_side(z, side)
    beta = p.beta

    log_F = _log_airy_arg(_phi_raw(w, tp), p.n, _sign(w), tilde=False)
    ok = _check_arg_ranges(w, log_F, None, tp, delta, strict)
    ai, aip = airy_ai_scaled(ScaledComplex.from_log(log_F).to_complex())

    sa, sb = cmath.sqrt(w - tp.a), cmath.sqrt(w - tp.b)
    log_denom = (
        (beta - 1) / 2 * cmath.log(w)
        + 0.25 * cmath.log(w - tp.a)
        + 0.25 * cmath.log(w - tp.b)
    )
    t1, t2 = _bracket_weights((sa + sb) / 2, (sa - sb) / 2, log_denom, log_F, beta)
    bracket = t1.mul(ai).sub(t2.mul(aip))

    D = d_factor(w, p.n, beta, HalfPlane.RIGHT if w.real == 0 else None)
    scale = _prefactor(w, p, tp, alternating=False).mul(D)
    value = scale.mul(bracket)
    envelope = _log_envelope(z, tp, scale, t1, t2, ScaledComplex.from_log(log_F).to_complex())

    return AsymptoticResult(
        value=value,
        log_envelope=envelope,
        formula=Formula.EXTERIOR,
        region=classify_region(z, delta),
        aux=_aux(w, p, tp, D, ok),
        z=z,
        z_evaluated=w,
        side=side,
    )


def asym_inside(
    z: complex,
    p: MeixnerParams,
    side: Optional[Side] = None,
    delta: Optional[float] = None,
    refined: bool = False,
    strict: bool = False,
) -> AsymptoticResult:
    """
    Interior formula for pi_n(n z - beta/2)

    cos(theta) Ai - sin(theta) Bi is assembled from e^{+-i theta} and
    Ai at the rotated arguments omega F~ and omega^2 F~, all scaled, so
    the exponentially large pieces never materialise. With refined=True
    each bracket gains e^{+-i theta} (D^-2 W^-1 - 1) Ai(F~).

    Raises:
        SingularPointError: z is exactly 0, a or b
    """
    z = complex(z)
    _require_n(p.n)
    tp = turning_points(p.c)
    _check_exact_singular(z, tp)
    delta = resolve_delta(tp, delta)
    side = _default_side(z, side)
    w = _on_side(z, side)
    beta = p.beta
    s = _sign(w)

    log_Ft = _log_airy_arg(-_phi_tilde_raw(w, tp), p.n, s, tilde=True)
    ok = _check_arg_ranges(w, None, log_Ft, tp, delta, strict)
    Ft = ScaledComplex.from_log(log_Ft).to_complex()

    r1, r2 = cmath.sqrt(tp.b - w), cmath.sqrt(tp.a - w)
    log_denom = (
        (beta - 1) / 2 * cmath.log(w)
        + 0.25 * cmath.log(tp.b - w)
        + 0.25 * cmath.log(tp.a - w)
    )
    t1, t2 = _bracket_weights((r1 + r2) / 2, (r1 - r2) / 2, log_denom, log_Ft, beta)

    th = theta(w, p.n, beta)
    e_plus = ScaledComplex.from_log(1j * th)
    e_minus = ScaledComplex.from_log(-1j * th)
    ai2, aip2 = airy_ai_scaled(_OMEGA2 * Ft)
    ai1, aip1 = airy_ai_scaled(OMEGA * Ft)
    c0 = e_plus.mul(_LOG_OMEGA2).mul(ai2).add(e_minus.mul(_LOG_OMEGA).mul(ai1)).neg()
    c1 = e_plus.mul(_LOG_OMEGA).mul(aip2).add(e_minus.mul(_LOG_OMEGA2).mul(aip1)).neg()

    D = d_factor(w, p.n, beta, HalfPlane.RIGHT if w.real == 0 else None)
    if refined:
        corr = ScaledComplex.from_complex(dw_combination(w, p.n, beta))
        ai0, aip0 = airy_ai_scaled(Ft)
        e_side = e_plus if s >= 0 else e_minus
        c0 = c0.add(e_side.mul(corr).mul(ai0))
        c1 = c1.add(e_side.mul(corr).mul(aip0))

    bracket = t1.mul(c0).add(t2.mul(c1))
    scale = _prefactor(w, p, tp, alternating=True).mul(D)
    value = scale.mul(bracket)

    return AsymptoticResult(
        value=value,
        log_envelope=_log_envelope(z, tp, scale, t1, t2, Ft),
        formula=Formula.INTERIOR,
        region=classify_region(z, delta),
        aux=_aux(w, p, tp, D, ok),
        z=z,
        z_evaluated=w,
        side=side,
        refined=refined,
    )


def _boundary_point(z: complex, region: RegionTag, delta: float, toward: Formula) -> complex:
    nu = settings.BOUNDARY_NUDGE
    if toward is Formula.INTERIOR:
        x = min(max(z.real, nu), 1 - nu)
        y = min(max(z.imag, -(delta - nu)), delta - nu)
        return complex(x, y)
    step = {"left": -nu, "right": nu, "top": 1j * nu, "bottom": -1j * nu}[region.edge]
    return z + step


def pi_n_asym(
    z: complex,
    p: MeixnerParams,
    delta: Optional[float] = None,
    side: Optional[Side] = None,
    refined: bool = False,
    boundary_formula: Formula = Formula.INTERIOR,
    strict: bool = False,
) -> AsymptoticResult:
    """
    Asymptotic pi_n(n z - beta/2), dispatched on the region of z

    Boundary points are moved BOUNDARY_NUDGE into the region of
    boundary_formula; the result keeps the original z and records the
    evaluated point.

    Raises:
        SingularPointError: z within SINGULAR_RADIUS of 0, a or b
    """
    z = complex(z)
    tp = turning_points(p.c)
    delta = resolve_delta(tp, delta)
    radius = settings.SINGULAR_RADIUS
    nearest = min(abs(z), abs(z - tp.a), abs(z - tp.b))
    if nearest < radius:
        raise SingularPointError(f"z = {z} is within {radius} of a singular point")

    region = classify_region(z, delta)
    if region.kind is RegionKind.INSIDE:
        return asym_inside(z, p, side, delta, refined, strict)
    if region.kind is RegionKind.OUTSIDE:
        return asym_outside(z, p, side, delta, strict)

    target = _boundary_point(z, region, delta, boundary_formula)
    logger.debug("boundary_nudged", z=str(z), edge=region.edge, toward=boundary_formula.value)
    if boundary_formula is Formula.INTERIOR:
        result = asym_inside(target, p, side, delta, refined, strict)
    else:
        result = asym_outside(target, p, side, delta, strict)
    return result.model_copy(update={"z": z, "region": region})
