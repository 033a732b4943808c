# resilmax/logging.py
"""
Loguru setup for the resilmax CLI.

Library modules only emit records; the CLI installs the single sink here once per run.
Solvers and the bench harness log from worker threads, so the sink is enqueued.
"""
from __future__ import annotations

import sys
from typing import TextIO

from loguru import logger

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> "
    "| <level>{level: <8}</level> "
    "| pid={process} tid={thread} "
    "<cyan>{module}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> "
    "- <level>{message}</level>"
)


def log_level(debug: bool) -> str:
    return "DEBUG" if debug else "INFO"


def configure_logging(*, debug: bool = False, sink: TextIO | None = None) -> int:
    """Replace every loguru sink with one stream sink.

    Args:
        debug: Switch to DEBUG and enable loguru's backtrace/diagnose output.
        sink: Target stream; stderr when omitted so stdout stays clean for CSV/JSON.

    Returns:
        The loguru handler id of the installed sink.
    """
    logger.remove()
    return logger.add(
        sink if sink is not None else sys.stderr,
        level=log_level(debug),
        format=LOG_FORMAT,
        enqueue=True,
        backtrace=debug,
        diagnose=debug,
    )
