"""structlog setup"""

import logging
import sys

import structlog


class _Stderr:
    """Writes to whatever sys.stderr is when the line is emitted"""

    def write(self, message: str) -> int:
        return sys.stderr.write(message)

    def flush(self) -> None:
        sys.stderr.flush()


def configure_logging(level: str = "INFO", fmt: str = "json") -> None:
    """
    Configure structlog for the current process

    Log lines go to stderr so that CSV/JSONL written to stdout stays
    machine-readable.

    Args:
        level: Standard level name (DEBUG, INFO, WARNING, ...)
        fmt: "json" for one JSON object per line, anything else for
            the human-readable console renderer
    """
    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        numeric_level = logging.INFO

    renderer = (
        structlog.processors.JSONRenderer()
        if fmt == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=structlog.PrintLoggerFactory(file=_Stderr()),
        cache_logger_on_first_use=False,
    )
