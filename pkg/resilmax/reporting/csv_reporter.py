"""
Benchmark CSV output.
"""

from __future__ import annotations

import csv
import io
import math
from typing import List, Sequence

from ..analysis.bench import COLUMNS, BenchRow
from ..io.file_reader import write_text_atomic


def _fmt(value: float) -> str:
    # errored trials carry NaN; their numeric cells stay blank
    return "" if math.isnan(value) else format(value, ".12g")


def _flag(value: bool) -> str:
    return "true" if value else "false"


def format_row(row: BenchRow) -> List[str]:
    """Cells in ``COLUMNS`` order; floats with 12 significant digits."""
    return [
        row.instance_id,
        str(row.n),
        row.matroid_type,
        str(row.rank),
        str(row.alpha),
        _fmt(row.nu),
        _fmt(row.myopic_value),
        _fmt(row.greedy_value),
        _fmt(row.exact_value),
        _fmt(row.bound),
        _fmt(row.ratio_myopic),
        _fmt(row.ratio_greedy),
        _flag(row.theorem_holds),
        _flag(row.proof_chain_holds),
        "" if row.wall_time_ms is None else f"{row.wall_time_ms:.3f}",
    ]


def bench_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(format_row(row))
    return buf.getvalue()


def write_bench_csv(rows: Sequence[BenchRow], path: str) -> None:
    write_text_atomic(path, bench_csv(rows))
