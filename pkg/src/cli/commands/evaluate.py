"""eval: exact and asymptotic values at a single point"""

import argparse
from typing import Any, Dict

import mpmath
import structlog

from src.cli.args import add_common, complex_point, positive_float, precision_from
from src.cli.output import scaled_json, write_json
from src.models.params import MeixnerParams, Side
from src.services.asymptotics import pi_n_asym
from src.services.meixner_exact import OracleService
from src.utils.config import settings

logger = structlog.get_logger()


def register(subparsers) -> None:
    p = subparsers.add_parser("eval", help="Evaluate m_n, pi_n or the asymptotic pi_n(nz - beta/2)")
    p.add_argument("--mode", choices=["exact", "asym", "both"], default="both")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--z", type=complex_point, required=True, help="re,im")
    p.add_argument("--delta", type=positive_float, default=settings.ASYM_DELTA)
    p.add_argument("--side", choices=[s.value for s in Side], default=None)
    p.add_argument("--refined", action="store_true")
    p.add_argument("--bits", type=int, default=settings.ORACLE_BITS)
    p.add_argument("--out", default=None)
    add_common(p)
    p.set_defaults(handler=cmd_eval)


def _oracle_decimal(value: Any) -> str:
    """Oracle value at FLOAT_DIGITS significant digits; real values print without an imaginary part"""
    value = mpmath.mpmathify(value)
    if isinstance(value, mpmath.mpc) and value.imag == 0:
        value = value.real
    return mpmath.nstr(value, settings.FLOAT_DIGITS)


def _oracle_json(value) -> Dict[str, Any]:
    out = scaled_json(value.scaled())
    out["value"] = _oracle_decimal(value.value)
    out.update(bits_used=value.bits_used, achieved_rel_err=value.achieved_rel_err)
    return out


def cmd_eval(args: argparse.Namespace) -> int:
    """
    exact: m_n(z) and pi_n(z) at the raw argument.
    asym/both: z is the scaled variable; both adds the oracle value at
    n z - beta/2 and the relative error.
    """
    params = MeixnerParams(c=args.c, beta=args.beta, n=args.n)
    oracle = OracleService(precision_from(args.bits))
    z = args.z
    report: Dict[str, Any] = {
        "mode": args.mode,
        "n": params.n,
        "c": params.c,
        "beta": params.beta,
        "re_z": z.real,
        "im_z": z.imag,
    }

    if args.mode == "exact":
        report["meixner"] = _oracle_json(oracle.meixner(params, z))
        report["monic"] = _oracle_json(oracle.monic(params, z))
        write_json(report, args.out)
        return 0

    side = Side(args.side) if args.side else None
    result = pi_n_asym(z, params, delta=args.delta, side=side, refined=args.refined)
    report.update(
        formula=result.formula.value,
        region=result.region.kind.value,
        re_z_evaluated=result.z_evaluated.real,
        im_z_evaluated=result.z_evaluated.imag,
        asym=scaled_json(result.value),
    )
    if args.mode == "both":
        exact = oracle.scaled_monic(params, z)
        report["exact"] = _oracle_json(exact)
        report["rel_err"] = result.value.rel_err(exact.scaled())
    logger.info("point_evaluated", n=params.n, z=str(z), formula=result.formula.value)
    write_json(report, args.out)
    return 0
