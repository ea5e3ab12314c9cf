"""
Parametrix lab

The outer parametrix N(z) and the Airy parametrix A(z) as 2x2
matrices, with residuals for their jump relations and large-z forms.
Nothing here is on the evaluation path of pi_n_asym.
"""

import cmath
import math
from typing import Optional

import structlog

from src.models.matrix import Matrix2C
from src.models.params import Side, TurningPoints
from src.models.scaled import ScaledComplex
from src.services.asymptotics import _log_airy_arg, _on_side, _phi_raw, _sign
from src.services.special_kernel import (
    OMEGA,
    SQRT_PI,
    airy_ai_scaled,
    airy_quartet,
    airy_zeta,
    branch_pow,
)
from src.utils.errors import BranchError, DomainError

logger = structlog.get_logger()

_OMEGA2 = OMEGA * OMEGA
_TARGET = Matrix2C.from_rows([[1, -1j], [-1j, 1]])


def _rel_mismatch(left: Matrix2C, right: Matrix2C) -> float:
    scale = max(left.max_abs(), right.max_abs(), 1e-300)
    return left.sub(right).max_abs() / scale


def n_matrix(z: complex, tp: TurningPoints, beta: float, side: Optional[Side] = None) -> Matrix2C:
    """
    Outer parametrix N(z), principal branches throughout

    Raises:
        BranchError: z real inside [a, b] with no side given
    """
    z = complex(z)
    if z.imag == 0 and tp.a <= z.real <= tp.b and side is None:
        raise BranchError(f"N({z.real}) lies on [a, b]; pass a side")
    w = _on_side(z, side)

    sa, sb = cmath.sqrt(w - tp.a), cmath.sqrt(w - tp.b)
    big, small = (sa + sb) / 2, (sa - sb) / 2
    quarter = branch_pow(w - tp.a, 0.25) * branch_pow(w - tp.b, 0.25)
    lo = branch_pow(w - 1, (1 - beta) / 2)
    hi = branch_pow(w - 1, (beta - 1) / 2)

    return Matrix2C.from_rows([
        [lo * branch_pow(big, beta) / quarter,
         -1j * hi * branch_pow(small, beta) / quarter],
        [1j * lo * branch_pow(small, 2 - beta) / quarter,
         hi * branch_pow(big, 2 - beta) / quarter],
    ])


def n_jump_residual(x: float, tp: TurningPoints, beta: float) -> float:
    """N+ against N- [[0, -|x-1|^{beta-1}], [|x-1|^{1-beta}, 0]] on (a, b)"""
    if not tp.a < x < tp.b:
        raise DomainError(f"x = {x} is not inside (a, b)")
    upper = n_matrix(x, tp, beta, Side.UPPER)
    lower = n_matrix(x, tp, beta, Side.LOWER)
    d = abs(x - 1)
    jump = Matrix2C.from_rows([[0, -d ** (beta - 1)], [d ** (1 - beta), 0]])
    return _rel_mismatch(upper, lower.matmul(jump))


def a_matrix(z: complex, side: Optional[Side] = None) -> Matrix2C:
    """
    Airy parametrix [[Ai, -i Bi], [i Ai', Bi']] [[1, -+1/2], [0, 1/2]]

    The right factor follows the half-plane; on the real axis the side
    selects it.
    """
    z = complex(z)
    if z.imag > 0:
        sign = 1
    elif z.imag < 0:
        sign = -1
    elif side is not None:
        sign = side.sign
    else:
        raise BranchError(f"A({z.real}) on the real axis needs a side")
    ai, aip, bi, bip = airy_quartet(z)
    left = Matrix2C.from_rows([[ai, -1j * bi], [1j * aip, bip]])
    right = Matrix2C.from_rows([[1, -sign * 0.5], [0, 0.5]])
    return left.matmul(right)


def a_jump_residual(x: float) -> float:
    """A+ against A- [[1, -1], [0, 1]] on the real line"""
    upper = a_matrix(x, Side.UPPER)
    lower = a_matrix(x, Side.LOWER)
    return _rel_mismatch(upper, lower.matmul(Matrix2C.from_rows([[1, -1], [0, 1]])))


def _normalised(z: complex, entries) -> Matrix2C:
    """2 sqrt(pi) diag(z^{1/4}, z^{-1/4}) M diag(e^{zeta}, e^{-zeta}) from scaled entries"""
    zeta = airy_zeta(z)
    q = ScaledComplex.from_complex(2 * SQRT_PI * branch_pow(z, 0.25))
    q_inv = ScaledComplex.from_complex(2 * SQRT_PI * branch_pow(z, -0.25))
    up, down = ScaledComplex.from_log(zeta), ScaledComplex.from_log(-zeta)
    (m11, m12), (m21, m22) = entries
    return Matrix2C.from_rows([
        [q.mul(m11).mul(up).to_complex(), q.mul(m12).mul(down).to_complex()],
        [q_inv.mul(m21).mul(up).to_complex(), q_inv.mul(m22).mul(down).to_complex()],
    ])


def _scaled_const(c: complex) -> ScaledComplex:
    return ScaledComplex.from_complex(c)


def a_asymptotic_residual(z: complex, side: Optional[Side] = None) -> float:
    """
    Distance of the normalised A(z) from [[1, -i], [-i, 1]]

    Uses the rotated form [[Ai, w^2 Ai(w^2 z)], [i Ai', i w Ai'(w^2 z)]]
    above the axis and its mirror below it.
    """
    z = complex(z)
    s = _sign(z) or (side.sign if side is not None else 0)
    if s == 0:
        raise BranchError("a_asymptotic_residual on the real axis needs a side")
    ai, aip = airy_ai_scaled(z)
    if s > 0:
        r, rp = airy_ai_scaled(_OMEGA2 * z)
        entries = (
            (ai, _scaled_const(_OMEGA2).mul(r)),
            (_scaled_const(1j).mul(aip), _scaled_const(1j * OMEGA).mul(rp)),
        )
    else:
        r, rp = airy_ai_scaled(OMEGA * z)
        entries = (
            (ai, _scaled_const(-OMEGA).mul(r)),
            (_scaled_const(1j).mul(aip), _scaled_const(-1j * _OMEGA2).mul(rp)),
        )
    return _normalised(z, entries).sub(_TARGET).max_abs()


def a_sector_check(z: complex, sign: int) -> float:
    """
    Residual of A(z) [[1, 0], [+-1, 1]] against its large-z form for
    |arg z| in (pi/3, pi]

    Raises:
        DomainError: sign is not +-1 or z is outside the sector
    """
    z = complex(z)
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    arg = cmath.phase(z)
    if sign > 0 and not math.pi / 3 < arg <= math.pi:
        raise DomainError(f"arg z = {arg} is outside (pi/3, pi]")
    if sign < 0 and not -math.pi <= arg < -math.pi / 3:
        raise DomainError(f"arg z = {arg} is outside [-pi, -pi/3)")

    a1, a1p = airy_ai_scaled(OMEGA * z)
    a2, a2p = airy_ai_scaled(_OMEGA2 * z)
    if sign > 0:
        entries = (
            (_scaled_const(-OMEGA).mul(a1), _scaled_const(_OMEGA2).mul(a2)),
            (_scaled_const(-1j * _OMEGA2).mul(a1p), _scaled_const(1j * OMEGA).mul(a2p)),
        )
    else:
        entries = (
            (_scaled_const(-_OMEGA2).mul(a2), _scaled_const(-OMEGA).mul(a1)),
            (_scaled_const(-1j * OMEGA).mul(a2p), _scaled_const(-1j * _OMEGA2).mul(a1p)),
        )
    return _normalised(z, entries).sub(_TARGET).max_abs()


def composite_matrix(z: complex, tp: TurningPoints, beta: float, n: int) -> Matrix2C:
    """N(z) (z-1)^{((beta-1)/2) sigma_3} [[1, i], [i, 1]] F(z)^{sigma_3/4}"""
    z = complex(z)
    if z.imag == 0:
        raise BranchError("composite_matrix is evaluated off the real axis")
    log_F = _log_airy_arg(_phi_raw(z, tp), n, _sign(z), tilde=False)
    k = (beta - 1) / 2
    power = Matrix2C.diag(branch_pow(z - 1, k), branch_pow(z - 1, -k))
    quarter = Matrix2C.diag(cmath.exp(log_F / 4), cmath.exp(-log_F / 4))
    mix = Matrix2C.from_rows([[1, 1j], [1j, 1]])
    return n_matrix(z, tp, beta).matmul(power).matmul(mix).matmul(quarter)


def composite_jump_residual(x: float, tp: TurningPoints, beta: float, n: int, eps: float = 1e-8) -> float:
    """Mismatch of the composite matrix across (1, b) at height eps"""
    if not 1 < x < tp.b:
        raise DomainError(f"x = {x} is not inside (1, b)")
    upper = composite_matrix(complex(x, eps), tp, beta, n)
    lower = composite_matrix(complex(x, -eps), tp, beta, n)
    return _rel_mismatch(upper, lower)
