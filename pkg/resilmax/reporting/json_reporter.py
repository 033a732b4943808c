"""
JSON reporting utilities (optional).
"""

from __future__ import annotations

import json
from typing import Any

from ..io.file_reader import write_text_atomic
from ..observability import to_dict


def to_json_text(result: Any) -> str:
    """Pretty JSON for any result dataclass."""
    return json.dumps(to_dict(result), indent=2) + "\n"


def write_json(result: Any, path: str) -> None:
    """Write a result to a file as pretty JSON."""
    write_text_atomic(path, to_json_text(result))
