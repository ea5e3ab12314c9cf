"""regions: region map of a z-plane grid"""

import argparse

from src.cli.args import add_common, add_output, grid_spec, positive_float
from src.cli.output import write_rows
from src.models.sweep import GridSpec, RegionRow
from src.services.asymptotics import classify_region, resolve_delta, turning_points
from src.utils.config import settings

DEFAULT_GRID_POINTS = 100


def register(subparsers) -> None:
    p = subparsers.add_parser("regions", help="Tag grid points as inside, outside or boundary")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--delta", type=positive_float, default=settings.ASYM_DELTA)
    p.add_argument("--grid", type=grid_spec, default=None,
                   help="re_min,re_max,im_min,im_max,step (default [-1,2] x [-3 delta,3 delta])")
    add_output(p)
    add_common(p)
    p.set_defaults(handler=cmd_regions)


def cmd_regions(args: argparse.Namespace) -> int:
    if not 0.0 < args.c < 1.0:
        raise ValueError(f"c must lie in (0, 1), got {args.c}")
    tp = turning_points(args.c)
    delta = resolve_delta(tp, args.delta)
    grid = args.grid or GridSpec(
        re_min=-1.0, re_max=2.0, im_min=-3 * delta, im_max=3 * delta,
        step=3.0 / (DEFAULT_GRID_POINTS - 1), im_step=6 * delta / (DEFAULT_GRID_POINTS - 1),
    )
    rows = [
        RegionRow(re_z=z.real, im_z=z.imag, region=classify_region(z, delta).kind.value, a=tp.a, b=tp.b)
        for z in grid.points()
    ]
    write_rows(rows, RegionRow, args.format, args.out)
    return 0
