# resilmax/__init__.py
"""
resilmax
========

Resilient monotone submodular maximization under matroid constraints: myopic selection
by singleton value, curvature, exact worst-case removals, and machine-checked
``(1 - nu)`` approximation certificates against brute-force optima.
"""
from __future__ import annotations

from importlib.metadata import version as _pkg_version

__all__ = ["__version__"]

try:
    # Read version dynamically from installed package metadata
    __version__: str = _pkg_version("resilmax")
except Exception:  # pragma: no cover - fallback for development environments
    __version__ = "0.0.0-dev"
