"""
Solvers for resilient maximization: myopic selection by singleton value (plus its
block-wise form), the classical marginal-gain greedy baseline, and an exhaustive
optimal solver used as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from loguru import logger

from ..config import DEFAULT_ADVERSARY_CAP, DEFAULT_EXACT_CAP
from ..errors import BudgetExceededError, InvalidArgumentError
from ..model.ground import ElementSet, with_element
from ..model.instance import Instance
from ..observability import Timer
from ..parallel import chunked, ordered_map
from .adversary import RemovalResult, worst_case_removal, worst_case_removal_exact

ALGORITHMS: Tuple[str, ...] = ("myopic", "myopic_blockwise", "greedy", "exact")
MYOPIC_ALGORITHMS = frozenset({"myopic", "myopic_blockwise"})


@dataclass(frozen=True)
class Solution:
    """Chosen set, how it was built, and its worst-case removal."""

    chosen: ElementSet
    selection_order: Tuple[int, ...]
    algorithm: str
    removal: RemovalResult
    value: float
    truncated: bool = False


def _finish(
    inst: Instance, order: Sequence[int], algorithm: str, adversary_cap: int
) -> Solution:
    chosen = tuple(sorted(order))
    removal = worst_case_removal(inst.objective, chosen, inst.alpha, adversary_cap)
    return Solution(
        chosen=chosen,
        selection_order=tuple(order),
        algorithm=algorithm,
        removal=removal,
        value=removal.value,
        truncated=len(chosen) < inst.rank,
    )


def _select(
    inst: Instance, score: Callable[[int, ElementSet], float]
) -> List[int]:
    """Grow a set to full rank, each step taking the feasible maximizer of ``score``.

    Ties go to the smallest id: candidates are scanned in ascending order and only a
    strictly larger score replaces the incumbent.
    """
    matroid = inst.matroid
    current: ElementSet = ()
    order: List[int] = []
    while len(current) < matroid.rank:
        taken = set(current)
        best: Optional[Tuple[float, int]] = None
        for a in range(inst.n):
            if a in taken or not matroid.can_add(current, a):
                continue
            value = score(a, current)
            if best is None or value > best[0]:
                best = (value, a)
        if best is None:
            logger.warning("no feasible candidate left at size {k}", k=len(current))
            break
        logger.debug("selected {a} (score={v})", a=best[1], v=best[0])
        order.append(best[1])
        current = with_element(current, best[1])
    return order


def solve_myopic(inst: Instance, *, adversary_cap: int = DEFAULT_ADVERSARY_CAP) -> Solution:
    """Repeatedly add the feasible element with the largest singleton value ``f({a})``."""
    f = inst.objective
    singles = [f.singleton(a) for a in range(inst.n)]
    order = _select(inst, lambda a, _current: singles[a])
    return _finish(inst, order, "myopic", adversary_cap)


def _block_top(args: Tuple[ElementSet, int, Sequence[float]]) -> List[int]:
    block, capacity, singles = args
    ranked = sorted(block, key=lambda a: (-singles[a], a))
    return ranked[:capacity]


def solve_myopic_blockwise(
    inst: Instance, *, workers: int = 1, adversary_cap: int = DEFAULT_ADVERSARY_CAP
) -> Solution:
    """Myopic selection run independently per partition block.

    Singleton values do not depend on the partial solution, so each block keeps its
    ``capacity`` best elements and the union equals :func:`solve_myopic`'s set.
    """
    f = inst.objective
    singles = [f.singleton(a) for a in range(inst.n)]
    blocks, capacities = inst.matroid.partition()
    picks = ordered_map(
        _block_top, [(b, c, singles) for b, c in zip(blocks, capacities)], workers=workers
    )
    order = [a for block_pick in picks for a in block_pick]
    return _finish(inst, order, "myopic_blockwise", adversary_cap)


def solve_greedy_marginal(
    inst: Instance, *, adversary_cap: int = DEFAULT_ADVERSARY_CAP
) -> Solution:
    """Classical greedy: add the feasible element with the largest marginal gain."""
    f = inst.objective
    order = _select(inst, f.marginal)
    return _finish(inst, order, "greedy", adversary_cap)


def _score_bases(
    args: Tuple[Instance, Sequence[ElementSet], int]
) -> Optional[Tuple[float, ElementSet, RemovalResult]]:
    inst, bases, cap = args
    best: Optional[Tuple[float, ElementSet, RemovalResult]] = None
    for base in bases:
        removal = worst_case_removal_exact(inst.objective, base, inst.alpha, cap)
        if best is None or (-removal.value, base) < (-best[0], best[1]):
            best = (removal.value, base, removal)
    return best


def solve_exact_resilient(
    inst: Instance,
    cap: int = DEFAULT_EXACT_CAP,
    *,
    adversary_cap: int = DEFAULT_ADVERSARY_CAP,
    workers: int = 1,
) -> Solution:
    """Score every base by its exact worst-case removal and keep the best.

    Ties go to the lexicographically smallest base, whatever the worker count.

    Raises:
        BudgetExceededError: more than ``cap`` bases.
    """
    matroid = inst.matroid
    count = matroid.base_count()
    if count > cap:
        raise BudgetExceededError("exact resilient solver", count, cap)
    bases = list(matroid.bases())
    with Timer("exact") as t:
        scored = ordered_map(
            _score_bases,
            [(inst, chunk, adversary_cap) for chunk in chunked(bases, workers)],
            workers=workers,
        )
    candidates = [s for s in scored if s is not None]
    value, base, removal = min(candidates, key=lambda s: (-s[0], s[1]))
    logger.debug(
        "exact solver scored {count} bases in {ms:.2f}ms -> {base} value={value}",
        count=count,
        ms=t.duration_ms,
        base=base,
        value=value,
    )
    return Solution(
        chosen=base,
        selection_order=base,
        algorithm="exact",
        removal=removal,
        value=value,
    )


def solve(
    inst: Instance,
    algorithm: str,
    *,
    workers: int = 1,
    exact_cap: int = DEFAULT_EXACT_CAP,
    adversary_cap: int = DEFAULT_ADVERSARY_CAP,
) -> Solution:
    """Dispatch to a solver by name."""
    if algorithm == "myopic":
        return solve_myopic(inst, adversary_cap=adversary_cap)
    if algorithm == "myopic_blockwise":
        return solve_myopic_blockwise(inst, workers=workers, adversary_cap=adversary_cap)
    if algorithm == "greedy":
        return solve_greedy_marginal(inst, adversary_cap=adversary_cap)
    if algorithm == "exact":
        return solve_exact_resilient(
            inst, exact_cap, adversary_cap=adversary_cap, workers=workers
        )
    raise InvalidArgumentError(
        f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}"
    )
