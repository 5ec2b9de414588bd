"""Logging setup for the raptorbound CLI."""

import logging

from rich.console import Console
from rich.logging import RichHandler

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def setup_logging(level: str = "WARNING") -> None:
    """Route library log records to a rich handler on stderr.

    Data files are written to stdout or to --out, so log lines never mix
    with CSV output.
    """
    level = level.upper()
    if level not in LOG_LEVELS:
        raise ValueError(f"Unknown log level: {level}")

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        show_time=False,
    )
    logging.basicConfig(
        level=getattr(logging, level),
        format="%(message)s",
        handlers=[handler],
        force=True,
    )
