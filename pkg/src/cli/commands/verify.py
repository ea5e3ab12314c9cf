"""verify: run the identity and convergence suites"""

import argparse

from src.cli.args import add_common, precision_from
from src.cli.output import write_json
from src.services.verification import SUITES, VerificationService
from src.utils.config import settings


def register(subparsers) -> None:
    p = subparsers.add_parser("verify", help="Run verification suites; exit 1 on any failure")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=settings.RANDOM_SEED, help="Seed for random test points")
    p.add_argument("--bits", type=int, default=settings.ORACLE_BITS)
    p.add_argument("--c", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=1.5)
    p.add_argument("--out", default=None)
    add_common(p)
    p.set_defaults(handler=cmd_verify)


def cmd_verify(args: argparse.Namespace) -> int:
    service = VerificationService(
        seed=args.seed, precision=precision_from(args.bits), c=args.c, beta=args.beta
    )
    report = service.run(args.suite)
    write_json(report.model_dump(mode="json"), args.out)
    return 0 if report.passed else 1
