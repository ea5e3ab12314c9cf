"""turning-points: a, b and the default strip half-width for c"""

import argparse

from src.cli.args import add_common
from src.cli.output import write_json
from src.services.asymptotics import default_delta, turning_points


def register(subparsers) -> None:
    p = subparsers.add_parser("turning-points", help="Print a, b, a*b and the default delta")
    p.add_argument("--c", type=float, required=True)
    add_common(p)
    p.set_defaults(handler=cmd_turning_points)


def cmd_turning_points(args: argparse.Namespace) -> int:
    if not 0.0 < args.c < 1.0:
        raise ValueError(f"c must lie in (0, 1), got {args.c}")
    tp = turning_points(args.c)
    write_json({"c": tp.c, "a": tp.a, "b": tp.b, "ab": tp.a * tp.b, "delta": default_delta(tp)})
    return 0
