"""
Extended-precision Meixner oracle

Meixner polynomials are evaluated from their terminating hypergeometric
sum. A value is accepted once two successive precisions (p and 2p)
agree to the requested relative tolerance.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple

import structlog

from src.models.params import MeixnerParams, PrecisionConfig
from src.models.results import OracleValue, OrthogonalityReport
from src.services.special_kernel import _is_pole, mp_context
from src.utils.config import settings
from src.utils.errors import OracleConvergenceError, PoleError

logger = structlog.get_logger()


def _to_mp(ctx, x: Any) -> Any:
    """Convert to the context; real inputs stay real"""
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    if isinstance(x, complex):
        return ctx.mpf(x.real) if x.imag == 0 else ctx.mpc(x)
    return ctx.convert(x)


def default_precision() -> PrecisionConfig:
    return PrecisionConfig(
        bits=settings.ORACLE_BITS,
        max_bits=settings.ORACLE_MAX_BITS,
        rel_tol=settings.ORACLE_REL_TOL,
    )


def meixner_sum(n: int, beta: Any, c: Any, x: Any, bits: int) -> Any:
    """
    m_n(x; beta, c) = (beta)_n sum_k (-n)_k (-x)_k / ((beta)_k k!) (1 - 1/c)^k

    Single evaluation at a fixed precision; any c != 0 is accepted.
    """
    ctx = mp_context(bits)
    x = _to_mp(ctx, x)
    beta = _to_mp(ctx, beta)
    c = _to_mp(ctx, c)
    ratio = 1 - 1 / c
    term = ctx.one
    total = ctx.one
    for k in range(n):
        term = term * (k - n) * (k - x) / ((beta + k) * (k + 1)) * ratio
        total += term
    return ctx.rf(beta, n) * total


def meixner_hyp2f1(n: int, beta: Any, c: Any, x: Any, bits: int) -> Any:
    """Same polynomial through mpmath's hyp2f1"""
    ctx = mp_context(bits)
    x = _to_mp(ctx, x)
    beta = _to_mp(ctx, beta)
    c = _to_mp(ctx, c)
    return ctx.rf(beta, n) * ctx.hyp2f1(-n, -x, beta, 1 - 1 / c)


def _rel_diff(prev: Any, cur: Any, bits: int) -> float:
    ctx = mp_context(bits)
    prev, cur = ctx.convert(prev), ctx.convert(cur)
    if cur == 0:
        return 0.0 if prev == 0 else float("inf")
    return float(abs(cur - prev) / abs(cur))


def escalate(
    fn: Callable[[int], Any],
    prec: PrecisionConfig,
    strict: bool = True,
    **log_context: Any,
) -> OracleValue:
    """
    Evaluate fn at prec.bits, 2*prec.bits, ... until two successive
    values agree to prec.rel_tol

    Raises:
        OracleConvergenceError: the cap was reached first (strict mode)
    """
    bits = prec.bits
    prev = fn(bits)
    rel = float("inf")
    while bits * 2 <= prec.max_bits:
        bits *= 2
        cur = fn(bits)
        rel = _rel_diff(prev, cur, bits)
        if rel <= prec.rel_tol:
            return OracleValue(value=cur, achieved_rel_err=rel, bits_used=bits)
        logger.warning("oracle_precision_escalated", bits=bits, rel_err=rel, **log_context)
        prev = cur

    logger.error("oracle_not_converged", bits=bits, rel_err=rel, **log_context)
    if strict:
        raise OracleConvergenceError(
            f"no agreement to {prec.rel_tol} below {prec.max_bits} bits", bits, rel
        )
    return OracleValue(value=prev, achieved_rel_err=rel, bits_used=bits, converged=False)


def meixner_eval(
    p: MeixnerParams, z: Any, prec: Optional[PrecisionConfig] = None
) -> OracleValue:
    """m_n(z; beta, c) certified by precision doubling"""
    prec = prec or default_precision()
    return escalate(
        lambda bits: meixner_sum(p.n, p.beta, p.c, z, bits),
        prec,
        n=p.n,
        what="meixner",
    )


def _monic_at(p: MeixnerParams, bits: int, x: Any) -> Any:
    ctx = mp_context(bits)
    ratio = 1 - 1 / ctx.convert(p.c)
    return meixner_sum(p.n, p.beta, p.c, x, bits) / ratio ** p.n


def monic_eval(
    p: MeixnerParams, z: Any, prec: Optional[PrecisionConfig] = None
) -> OracleValue:
    """pi_n(z) = (1 - 1/c)^{-n} m_n(z)"""
    prec = prec or default_precision()
    return escalate(lambda bits: _monic_at(p, bits, z), prec, n=p.n, what="monic")


def scaled_monic_eval(
    p: MeixnerParams, z: Any, prec: Optional[PrecisionConfig] = None
) -> OracleValue:
    """pi_n(n z - beta/2), with the argument formed at full precision"""
    prec = prec or default_precision()

    def at(bits: int) -> Any:
        ctx = mp_context(bits)
        x = _to_mp(ctx, z) * p.n - ctx.convert(p.beta) / 2
        return _monic_at(p, bits, x)

    return escalate(at, prec, n=p.n, what="scaled_monic")


def weight(k: Any, p: MeixnerParams, bits: Optional[int] = None) -> Any:
    """w(k) = Gamma(k + beta) / Gamma(k + 1) c^k"""
    bits = bits or settings.ORACLE_BITS
    ctx = mp_context(bits)
    k = _to_mp(ctx, k)
    beta = ctx.convert(p.beta)
    for arg in (k + beta, k + 1):
        if _is_pole(complex(arg)):
            raise PoleError(f"weight has a pole at k={k}")
    return ctx.gamma(k + beta) / ctx.gamma(k + 1) * ctx.convert(p.c) ** k


def gamma_n_sq(p: MeixnerParams, bits: Optional[int] = None) -> Any:
    """gamma_n^2 = (1-c)^{2n+beta} c^{-n} / (Gamma(n+beta) Gamma(n+1))"""
    bits = bits or settings.ORACLE_BITS
    ctx = mp_context(bits)
    c = ctx.convert(p.c)
    beta = ctx.convert(p.beta)
    return (1 - c) ** (2 * p.n + beta) * c ** (-p.n) / (
        ctx.gamma(p.n + beta) * ctx.gamma(p.n + 1)
    )


def _orthogonality(
    n: int, m: int, params: MeixnerParams, K: int, bits: int, monic: bool
) -> OrthogonalityReport:
    if K < 50:
        raise ValueError(f"truncation K must be at least 50, got {K}")
    ctx = mp_context(bits)
    c = ctx.convert(params.c)
    beta = ctx.convert(params.beta)

    if monic:
        w = ctx.gamma(beta)
        if n == m:
            target = 1 / gamma_n_sq(params.model_copy(update={"n": n}), bits)
        else:
            target = ctx.zero
    else:
        w = ctx.one
        if n == m:
            target = (1 - c) ** (-beta) * c ** (-n) * ctx.factorial(n) * ctx.rf(beta, n)
        else:
            target = ctx.zero

    ratio = 1 - 1 / c

    def poly(deg: int, k: int) -> Any:
        value = meixner_sum(deg, beta, c, k, bits)
        return value / ratio ** deg if monic else value

    def term(k: int, wk: Any) -> Any:
        return poly(n, k) * poly(m, k) * wk

    total = ctx.zero
    largest = abs(target)
    for k in range(K + 1):
        t = term(k, w)
        total += t
        largest = max(largest, abs(t))
        w = w * (k + beta) / (k + 1) * c

    t_next = term(K + 1, w)
    w_next = w * (K + 1 + beta) / (K + 2) * c
    t_after = term(K + 2, w_next)

    q = (1 + c) / 2
    tail_bound = abs(t_next) / (1 - q)
    threshold = 2 * max(n, m, 1) / (1 - float(params.c))
    ratio_ok = t_next == 0 or abs(t_after) <= q * abs(t_next)
    certified = K >= threshold and ratio_ok
    if not certified:
        logger.warning(
            "orthogonality_tail_uncertified", n=n, p=m, K=K, threshold=threshold
        )

    residual = abs(total - target)
    rounding = ctx.mpf(2) ** (-bits + 8) * largest * (K + 1)
    return OrthogonalityReport(
        n=n,
        p=m,
        K=K,
        target=float(target),
        residual=float(residual),
        tail_bound=float(tail_bound),
        rounding_allowance=float(rounding),
        certified=certified,
        within_bound=bool(residual <= tail_bound + rounding),
    )


def orthogonality_residual(
    n: int, p_idx: int, params: MeixnerParams, K: int, bits: int = 256
) -> OrthogonalityReport:
    """sum_{k<=K} pi_n(k) pi_p(k) w(k) against delta_np / gamma_n^2"""
    return _orthogonality(n, p_idx, params, K, bits, monic=True)


def meixner_orthogonality_residual(
    n: int, p_idx: int, params: MeixnerParams, K: int, bits: int = 256
) -> OrthogonalityReport:
    """sum_{k<=K} m_n(k) m_p(k) c^k (beta)_k / k! against (1-c)^{-beta} c^{-n} n! (beta)_n delta_np"""
    return _orthogonality(n, p_idx, params, K, bits, monic=False)


def connection_residual(n: int, beta: Any, c: Any, x: Any, bits: int = 256) -> float:
    """Relative mismatch of m_n(-x-beta; beta, 1/c) = c^n m_n(x; beta, c)"""
    ctx = mp_context(bits)
    beta_m = _to_mp(ctx, beta)
    c_m = _to_mp(ctx, c)
    x_m = _to_mp(ctx, x)
    lhs = meixner_sum(n, beta_m, 1 / c_m, -x_m - beta_m, bits)
    rhs = c_m ** n * meixner_sum(n, beta_m, c_m, x_m, bits)
    if rhs == 0:
        return float(abs(lhs))
    return float(abs(lhs - rhs) / abs(rhs))


class OracleService:
    """
    Oracle evaluations with an in-process cache

    Sweeps revisit the same (params, z) for both formulas and for
    boundary checks; values are immutable so they are shared freely.
    """

    def __init__(self, precision: Optional[PrecisionConfig] = None):
        self.precision = precision or default_precision()
        self._cache: Dict[Tuple, OracleValue] = {}

    def _get(self, key: Tuple, compute: Callable[[], OracleValue]) -> OracleValue:
        hit = self._cache.get(key)
        if hit is not None:
            logger.debug("oracle_cache_hit", key=str(key))
            return hit
        value = compute()
        self._cache[key] = value
        return value

    def meixner(self, params: MeixnerParams, z: complex) -> OracleValue:
        key = ("meixner", params.c, params.beta, params.n, complex(z))
        return self._get(key, lambda: meixner_eval(params, z, self.precision))

    def monic(self, params: MeixnerParams, z: complex) -> OracleValue:
        key = ("monic", params.c, params.beta, params.n, complex(z))
        return self._get(key, lambda: monic_eval(params, z, self.precision))

    def scaled_monic(self, params: MeixnerParams, z: complex) -> OracleValue:
        key = ("scaled", params.c, params.beta, params.n, complex(z))
        return self._get(key, lambda: scaled_monic_eval(params, z, self.precision))

    def clear(self) -> None:
        self._cache.clear()

    def __len__(self) -> int:
        return len(self._cache)
