"""
Benchmark harness: random desk-scale instances, every solver, one certificate per trial.

Trial ``i`` draws its instance from ``SeedSequence([seed, i])``, so each row depends only
on the seed and its index; rows are gathered in index order whatever the worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from statistics import fmean
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..config import DEFAULT_ADVERSARY_CAP, DEFAULT_EXACT_CAP
from ..errors import InvalidArgumentError, ResilMaxError
from ..model.generate import FAMILIES, check_bench_limits, make_rng, random_bench_instance
from ..model.instance import Instance
from ..observability import Timer
from ..parallel import ordered_map
from .solvers import solve_exact_resilient, solve_greedy_marginal, solve_myopic
from .verify import REL_TOL, certify, resilient_ratio

COLUMNS: Tuple[str, ...] = (
    "instance_id",
    "n",
    "matroid_type",
    "rank",
    "alpha",
    "nu",
    "myopic_value",
    "greedy_value",
    "exact_value",
    "bound",
    "ratio_myopic",
    "ratio_greedy",
    "theorem_holds",
    "proof_chain_holds",
    "wall_time_ms",
)


@dataclass(frozen=True)
class BenchConfig:
    families: Tuple[str, ...] = FAMILIES
    trials: int = 300
    seed: int = 42
    n_max: int = 10
    rank_max: int = 5
    alpha_max: int = 2
    workers: int = 1
    record_timing: bool = False
    exact_cap: int = DEFAULT_EXACT_CAP
    adversary_cap: int = DEFAULT_ADVERSARY_CAP

    def __post_init__(self) -> None:
        unknown = [f for f in self.families if f not in FAMILIES]
        if not self.families or unknown:
            raise InvalidArgumentError(
                f"unknown families {unknown or list(self.families)}; choose from {FAMILIES}"
            )
        if self.trials < 0:
            raise InvalidArgumentError(f"trials must be nonnegative, got {self.trials}")
        if self.workers < 1:
            raise InvalidArgumentError(f"workers must be positive, got {self.workers}")
        check_bench_limits(self.n_max, self.rank_max, self.alpha_max)


@dataclass(frozen=True)
class BenchRow:
    instance_id: str
    family: str
    n: int
    matroid_type: str
    rank: int
    alpha: int
    nu: float
    myopic_value: float
    greedy_value: float
    exact_value: float
    bound: float
    ratio_myopic: float
    ratio_greedy: float
    theorem_holds: bool
    proof_chain_holds: bool
    wall_time_ms: Optional[float] = None
    error: Optional[str] = None

    @property
    def violation(self) -> bool:
        """Trial errored, or a bound, chain or ratio check failed on this row."""
        return (
            self.error is not None
            or not self.theorem_holds
            or not self.proof_chain_holds
            or self.ratio_myopic < 1.0 - self.nu - REL_TOL
        )


@dataclass(frozen=True)
class FamilySummary:
    family: str
    trials: int
    min_ratio_myopic: float
    mean_ratio_myopic: float
    min_ratio_greedy: float
    mean_ratio_greedy: float
    violations: int


@dataclass
class BenchResult:
    rows: List[BenchRow]
    summaries: List[FamilySummary] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(1 for r in self.rows if r.violation)

    @property
    def errors(self) -> int:
        return sum(1 for r in self.rows if r.error is not None)

    @property
    def min_ratio_myopic(self) -> Optional[float]:
        return min((r.ratio_myopic for r in self.rows if r.error is None), default=None)


def _family_of(config: BenchConfig, index: int) -> str:
    return config.families[index % len(config.families)]


def _failed_row(config: BenchConfig, index: int, inst: Instance, exc: ResilMaxError) -> BenchRow:
    nan = math.nan
    family = _family_of(config, index)
    return BenchRow(
        instance_id=f"{family}-{index:05d}",
        family=family,
        n=inst.n,
        matroid_type=inst.matroid.kind,
        rank=inst.rank,
        alpha=inst.alpha,
        nu=nan,
        myopic_value=nan,
        greedy_value=nan,
        exact_value=nan,
        bound=nan,
        ratio_myopic=nan,
        ratio_greedy=nan,
        theorem_holds=False,
        proof_chain_holds=False,
        error=f"{type(exc).__name__}: {exc}",
    )


def run_trial(config: BenchConfig, index: int) -> BenchRow:
    """Generate, solve and certify trial ``index``.

    A domain error while solving or certifying does not abort the sweep: the trial comes
    back as a row with ``error`` set, both checks false and blank numeric cells.
    """
    family = _family_of(config, index)
    rng = make_rng(config.seed, index)
    inst = random_bench_instance(
        family,
        rng,
        n_max=config.n_max,
        rank_max=config.rank_max,
        alpha_max=config.alpha_max,
    )
    try:
        with Timer(f"trial-{index}") as t:
            myopic = solve_myopic(inst, adversary_cap=config.adversary_cap)
            greedy = solve_greedy_marginal(inst, adversary_cap=config.adversary_cap)
            exact = solve_exact_resilient(
                inst, config.exact_cap, adversary_cap=config.adversary_cap
            )
            cert = certify(inst, myopic, exact, cap=config.adversary_cap)
    except ResilMaxError as e:
        logger.warning("trial {i} ({family}) failed: {err}", i=index, family=family, err=e)
        return _failed_row(config, index, inst, e)
    logger.debug(
        "trial {i} ({family}) done in {ms:.2f}ms", i=index, family=family, ms=t.duration_ms
    )
    return BenchRow(
        instance_id=f"{family}-{index:05d}",
        family=family,
        n=inst.n,
        matroid_type=inst.matroid.kind,
        rank=inst.rank,
        alpha=inst.alpha,
        nu=cert.nu.nu,
        myopic_value=cert.value_sol,
        greedy_value=greedy.value,
        exact_value=cert.value_opt,
        bound=cert.bound,
        ratio_myopic=cert.ratio,
        ratio_greedy=resilient_ratio(greedy.value, cert.value_opt),
        theorem_holds=cert.theorem_holds,
        proof_chain_holds=cert.proof_chain.all_hold,
        wall_time_ms=t.duration_ms if config.record_timing else None,
    )


def _min_mean(values: Sequence[float]) -> Tuple[float, float]:
    if not values:
        return math.nan, math.nan
    return min(values), fmean(values)


def summarize(rows: Sequence[BenchRow], families: Sequence[str]) -> List[FamilySummary]:
    """Per-family minimum/mean ratios and violation counts (families with rows only).

    Errored rows count as violations but carry no ratios; a family with only errored rows
    reports NaN ratios.
    """
    by_family: Dict[str, List[BenchRow]] = {f: [] for f in families}
    for row in rows:
        by_family.setdefault(row.family, []).append(row)
    out = []
    for family, group in by_family.items():
        if not group:
            continue
        done = [r for r in group if r.error is None]
        min_myopic, mean_myopic = _min_mean([r.ratio_myopic for r in done])
        min_greedy, mean_greedy = _min_mean([r.ratio_greedy for r in done])
        out.append(
            FamilySummary(
                family=family,
                trials=len(group),
                min_ratio_myopic=min_myopic,
                mean_ratio_myopic=mean_myopic,
                min_ratio_greedy=min_greedy,
                mean_ratio_greedy=mean_greedy,
                violations=sum(1 for r in group if r.violation),
            )
        )
    return out


def run_bench(config: BenchConfig) -> BenchResult:
    """Run ``config.trials`` trials, fanning out over ``config.workers`` threads."""
    with Timer("bench") as t:
        rows = ordered_map(
            lambda i: run_trial(config, i), range(config.trials), workers=config.workers
        )
    result = BenchResult(rows=rows, summaries=summarize(rows, config.families))
    logger.info(
        "bench: {n} trials, {v} violations ({e} errored), {ms:.0f}ms",
        n=len(rows),
        v=result.violations,
        e=result.errors,
        ms=t.duration_ms,
    )
    return result
