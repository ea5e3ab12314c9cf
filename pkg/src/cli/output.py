"""
Row and report writers

Files are written to a temporary sibling and renamed into place, so a
failed run never leaves a partial file behind.
"""

import csv
import io
import json
import math
import os
import sys
import tempfile
from typing import Any, Dict, List, Optional, Sequence, Type

import structlog
from pydantic import BaseModel

from src.models.scaled import ScaledComplex
from src.models.sweep import OutputFormat
from src.utils.config import settings

logger = structlog.get_logger()


def format_value(value: Any, digits: Optional[int] = None) -> str:
    digits = settings.FLOAT_DIGITS if digits is None else digits
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.{digits}g}"
    return str(value)


def render_rows(rows: Sequence[BaseModel], model: Type[BaseModel], fmt: str) -> str:
    """CSV with columns in model field order, or one JSON object per line"""
    fields = list(model.model_fields)
    buf = io.StringIO()
    if fmt == OutputFormat.CSV:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            data = row.model_dump()
            writer.writerow([format_value(data[f]) for f in fields])
    else:
        for row in rows:
            buf.write(json.dumps(row.model_dump(mode="json")) + "\n")
    return buf.getvalue()


def write_text(text: str, out: Optional[str] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = os.path.abspath(out)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info("output_written", path=target, bytes=len(text))


def write_rows(rows: Sequence[BaseModel], model: Type[BaseModel], fmt: str, out: Optional[str] = None) -> None:
    write_text(render_rows(rows, model, fmt), out)


def write_json(payload: Any, out: Optional[str] = None) -> None:
    write_text(json.dumps(payload, indent=2) + "\n", out)


def scaled_json(value: ScaledComplex) -> Dict[str, Any]:
    """(log_mag, phase) plus a decimal rendering that never overflows"""
    return {
        "log_mag": value.log_mag if not value.is_zero else None,
        "phase": value.phase,
        "value": value.decimal_string(settings.FLOAT_DIGITS),
    }


def fits_json(fits: List[BaseModel]) -> List[Dict[str, Any]]:
    return [f.model_dump(mode="json") for f in fits]
