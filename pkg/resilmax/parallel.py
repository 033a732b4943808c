"""
Ordered fan-out over a thread pool.

Results always come back in input order, so every reduction built on top of
``ordered_map`` is independent of the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], *, workers: int = 1) -> List[R]:
    """Apply ``fn`` to every item, possibly in parallel, preserving input order."""
    seq = list(items)
    if workers <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    with ThreadPoolExecutor(max_workers=min(workers, len(seq))) as pool:
        return list(pool.map(fn, seq))


def chunked(items: Sequence[T], n_chunks: int) -> List[Sequence[T]]:
    """Split ``items`` into at most ``n_chunks`` contiguous, near-equal slices."""
    if not items:
        return []
    n_chunks = max(1, min(n_chunks, len(items)))
    size, extra = divmod(len(items), n_chunks)
    out: List[Sequence[T]] = []
    start = 0
    for i in range(n_chunks):
        end = start + size + (1 if i < extra else 0)
        out.append(items[start:end])
        start = end
    return out
