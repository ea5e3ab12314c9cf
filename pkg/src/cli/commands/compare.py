"""compare: sweeps of the asymptotic formulas against the oracle"""

import argparse

import structlog

from src.cli.args import (
    add_common,
    add_output,
    complex_point,
    float_list,
    grid_spec,
    int_list,
    positive_float,
    precision_from,
)
from src.cli.output import fits_json, write_json, write_rows
from src.models.sweep import CompareRow, SweepSpec
from src.services.comparison import ComparisonService, fit_rows
from src.services.meixner_exact import OracleService
from src.utils.config import settings

logger = structlog.get_logger()


def register(subparsers) -> None:
    p = subparsers.add_parser("compare", help="Compare asymptotic and exact values over n and z")
    counts = p.add_mutually_exclusive_group(required=True)
    counts.add_argument("--n-list", type=int_list)
    counts.add_argument("--n", type=int)
    p.add_argument("--c", type=float_list, required=True, help="One value or a comma list")
    p.add_argument("--beta", type=float_list, required=True, help="One value or a comma list")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--z", type=complex_point, help="re,im")
    where.add_argument("--grid", type=grid_spec, help="re_min,re_max,im_min,im_max,step")
    p.add_argument("--delta", type=positive_float, default=settings.ASYM_DELTA)
    p.add_argument("--refined", action="store_true")
    p.add_argument("--bits", type=int, default=settings.ORACLE_BITS)
    p.add_argument("--jobs", type=int, default=settings.SWEEP_JOBS)
    p.add_argument("--fit", action="store_true", help="Fit a convergence order per (c, beta, z)")
    p.add_argument("--summary", default=None, help="JSON summary path (with --fit)")
    add_output(p)
    add_common(p)
    p.set_defaults(handler=cmd_compare)


def build_spec(args: argparse.Namespace) -> SweepSpec:
    n_list = args.n_list if args.n_list is not None else [args.n]
    points = [args.z] if args.z is not None else args.grid.points()
    return SweepSpec(
        c_list=args.c,
        beta_list=args.beta,
        n_list=n_list,
        points=points,
        delta=args.delta,
        precision=precision_from(args.bits),
        refined=args.refined,
    )


def cmd_compare(args: argparse.Namespace) -> int:
    spec = build_spec(args)
    service = ComparisonService(OracleService(spec.precision))
    rows = service.run(spec, jobs=max(1, args.jobs))
    write_rows(rows, CompareRow, args.format, args.out)

    if args.fit:
        fits = fit_rows(rows)
        if args.summary:
            write_json({"rows": len(rows), "fits": fits_json(fits)}, args.summary)
    return 0
