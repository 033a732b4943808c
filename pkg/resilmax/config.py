"""
Runtime settings read from the environment.

Only one variable is recognised: ``RESILMAX_THREADS`` caps the worker count used by
parallel enumeration and the benchmark harness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import ConfigError

THREADS_ENV = "RESILMAX_THREADS"

DEFAULT_ADVERSARY_CAP = 10**6
DEFAULT_EXACT_CAP = 10**6
DEFAULT_CACHE_SIZE = 2**20


@dataclass(frozen=True)
class Settings:
    """Resolved runtime settings."""

    workers: int
    adversary_cap: int = DEFAULT_ADVERSARY_CAP
    exact_cap: int = DEFAULT_EXACT_CAP


def _default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Build settings from ``environ`` (defaults to ``os.environ``).

    Raises:
        ConfigError: if ``RESILMAX_THREADS`` is set but not a positive integer.
    """
    env = os.environ if environ is None else environ
    raw = env.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return Settings(workers=_default_workers())
    try:
        workers = int(raw)
    except ValueError as e:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from e
    if workers < 1:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return Settings(workers=workers)
