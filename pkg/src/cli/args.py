"""Flag parsers shared by the subcommands"""

import argparse
from typing import List

from src.models.params import PrecisionConfig
from src.models.sweep import GridSpec, OutputFormat
from src.utils.config import settings


def _floats(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def float_list(text: str) -> List[float]:
    values = _floats(text)
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def complex_point(text: str) -> complex:
    """'re,im' or a bare real part"""
    values = _floats(text)
    if len(values) == 1:
        return complex(values[0], 0.0)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected re,im, got {text!r}")
    return complex(values[0], values[1])


def grid_spec(text: str) -> GridSpec:
    values = _floats(text)
    if len(values) != 5:
        raise argparse.ArgumentTypeError("expected re_min,re_max,im_min,im_max,step")
    if values[4] <= 0:
        raise argparse.ArgumentTypeError("grid step must be positive")
    re_min, re_max, im_min, im_max, step = values
    return GridSpec(re_min=re_min, re_max=re_max, im_min=im_min, im_max=im_max, step=step)


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def precision_from(bits: int) -> PrecisionConfig:
    return PrecisionConfig(
        bits=bits,
        max_bits=max(settings.ORACLE_MAX_BITS, bits),
        rel_tol=settings.ORACLE_REL_TOL,
    )


def add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--log-level", default=None, help="Overrides LOG_LEVEL")


def add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=settings.OUTPUT_FORMAT)
    parser.add_argument("--out", default=None, help="Write here instead of stdout")
