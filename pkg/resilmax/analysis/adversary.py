"""
Worst-case removals: exact enumeration and a greedy heuristic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from loguru import logger

from ..config import DEFAULT_ADVERSARY_CAP
from ..errors import BudgetExceededError, InvalidArgumentError
from ..model.ground import ElementSet, element_set, without
from ..model.objective import Objective


@dataclass(frozen=True)
class RemovalResult:
    """Removal ``B`` chosen from ``A``, the remainder ``A ∖ B`` and its value."""

    removed: ElementSet
    remaining: ElementSet
    value: float
    exact: bool


def removal_size(a: Sequence[int], alpha: int) -> int:
    """Size of the normalized removal, ``min(α, |A|)``."""
    if alpha < 0:
        raise InvalidArgumentError(f"alpha must be nonnegative, got {alpha}")
    return min(alpha, len(a))


def worst_case_removal_exact(
    f: Objective, a: Sequence[int], alpha: int, cap: int = DEFAULT_ADVERSARY_CAP
) -> RemovalResult:
    """Optimal removal of exactly ``min(α, |A|)`` elements of ``A``.

    Combinations are enumerated lexicographically and only a strictly smaller value
    replaces the incumbent, so ties resolve to the lexicographically smallest removal.

    Raises:
        BudgetExceededError: more than ``cap`` candidate removals.
    """
    base = element_set(a, f.n)
    k = removal_size(base, alpha)
    count = math.comb(len(base), k)
    if count > cap:
        raise BudgetExceededError("worst-case removal", count, cap)
    best_value: Optional[float] = None
    best_removed: ElementSet = ()
    for removed in itertools.combinations(base, k):
        value = f.evaluate(without(base, removed))
        if best_value is None or value < best_value:
            best_value, best_removed = value, removed
    assert best_value is not None
    logger.debug(
        "exact removal |A|={size} k={k} candidates={count} -> {removed}",
        size=len(base),
        k=k,
        count=count,
        removed=best_removed,
    )
    return RemovalResult(
        removed=best_removed,
        remaining=without(base, best_removed),
        value=best_value,
        exact=True,
    )


def worst_case_removal_greedy(f: Objective, a: Sequence[int], alpha: int) -> RemovalResult:
    """Remove, one at a time, the element whose loss leaves the smallest value."""
    current = element_set(a, f.n)
    k = removal_size(current, alpha)
    removed = []
    for _ in range(k):
        best_value: Optional[float] = None
        best_b = -1
        for b in current:
            value = f.evaluate(without(current, (b,)))
            if best_value is None or value < best_value:
                best_value, best_b = value, b
        removed.append(best_b)
        current = without(current, (best_b,))
    return RemovalResult(
        removed=tuple(sorted(removed)),
        remaining=current,
        value=f.evaluate(current),
        exact=False,
    )


def worst_case_removal(
    f: Objective, a: Sequence[int], alpha: int, cap: int = DEFAULT_ADVERSARY_CAP
) -> RemovalResult:
    """Exact removal when within ``cap``, otherwise the greedy heuristic."""
    try:
        return worst_case_removal_exact(f, a, alpha, cap)
    except BudgetExceededError as e:
        logger.warning("{err}; falling back to greedy removal", err=e)
        return worst_case_removal_greedy(f, a, alpha)


def resilient_value(
    f: Objective, a: Sequence[int], alpha: int, cap: int = DEFAULT_ADVERSARY_CAP
) -> float:
    """``min_{B ⊆ A, |B| ≤ α} f(A ∖ B)``."""
    return worst_case_removal_exact(f, a, alpha, cap).value
