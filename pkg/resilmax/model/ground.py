"""
Ground sets and canonical element sets.

An element set is represented as a strictly increasing tuple of element ids; every
operation that accepts sets canonicalizes through :func:`element_set` first, which also
makes those tuples usable as cache keys and gives a total (lexicographic) order for
tie-breaking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from ..errors import InvalidArgumentError, InvalidElementError

ElementSet = Tuple[int, ...]

EMPTY: ElementSet = ()


@dataclass(frozen=True)
class GroundSet:
    """Ground set ``{0, ..., n-1}`` with optional per-element labels."""

    n: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgumentError(f"ground set size must be nonnegative, got {self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidArgumentError(
                f"expected {self.n} labels, got {len(self.labels)}"
            )

    def label(self, x: int) -> str:
        """Label of ``x``, falling back to its id."""
        check_element(x, self.n)
        return self.labels[x] if self.labels is not None else str(x)


def check_element(x: int, n: int) -> None:
    """Raise :class:`InvalidElementError` unless ``0 <= x < n``."""
    if not 0 <= x < n:
        raise InvalidElementError(f"element id {x} outside ground set of size {n}")


def element_set(ids: Iterable[int], n: int) -> ElementSet:
    """Canonicalize ``ids`` into a sorted duplicate-free tuple, validating every id."""
    out = tuple(sorted(set(int(x) for x in ids)))
    for x in out:
        check_element(x, n)
    return out


def with_element(s: ElementSet, x: int) -> ElementSet:
    """``s ∪ {x}`` in canonical form."""
    return tuple(sorted(set(s) | {x}))


def without(s: ElementSet, removed: Iterable[int]) -> ElementSet:
    """``s ∖ removed`` in canonical form."""
    drop = set(removed)
    return tuple(x for x in s if x not in drop)


def to_mask(s: ElementSet) -> int:
    """Binary-counter index of ``s`` (bit i set ⇔ element i present)."""
    mask = 0
    for x in s:
        mask |= 1 << x
    return mask


def from_mask(mask: int) -> ElementSet:
    """Inverse of :func:`to_mask`."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def parse_id_list(text: str, n: int) -> ElementSet:
    """Parse ``"i,j,k"`` (whitespace tolerant, empty allowed) into an element set."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        ids = [int(p) for p in parts]
    except ValueError as e:
        raise InvalidArgumentError(f"invalid element list {text!r}") from e
    return element_set(ids, n)
