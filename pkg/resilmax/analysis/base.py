"""
Named pass/fail checks shared by the verification reports and the console tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List


@dataclass
class Finding:
    """One inequality check: its name, outcome, the evaluated sides and extra context."""

    name: str
    ok: bool
    details: str = ""
    context: Dict[str, Any] = field(default_factory=dict)


def failed(findings: Iterable[Finding]) -> List[str]:
    """Names of the checks that did not hold, in input order."""
    return [f.name for f in findings if not f.ok]
