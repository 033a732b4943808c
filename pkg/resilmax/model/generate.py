"""
Seeded random instance generation.

Every generator draws from a numpy ``Generator`` backed by ``PCG64`` and seeded through
``SeedSequence``; the same seed therefore yields the same instance on every platform.
Weights are rounded to 6 decimals so generated files stay readable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from ..errors import InvalidArgumentError
from .ground import GroundSet
from .instance import Instance
from .matroid import Matroid, Partition, Uniform
from .objective import FacilityLocation, Modular, Objective, WeightedCoverage

FAMILIES = ("coverage", "facility_location", "modular")
DECIMALS = 6
SEED_MAX = 2**64 - 1


@dataclass(frozen=True)
class GenParams:
    """Knobs shared by the generators; ``None`` picks a size-dependent default."""

    items: Optional[int] = None
    clients: Optional[int] = None
    matroid: str = "uniform"
    rank: Optional[int] = None
    blocks: Optional[int] = None
    capacity: int = 1
    alpha: int = 1


def make_rng(seed: int, *extra: int) -> np.random.Generator:
    """PCG64 generator seeded from ``seed`` (64-bit) and optional extra words."""
    if not 0 <= seed <= SEED_MAX:
        raise InvalidArgumentError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *extra])))


def _weights(rng: np.random.Generator, size: int) -> np.ndarray:
    return np.round(rng.random(size), DECIMALS)


def random_coverage(rng: np.random.Generator, n: int, items: int) -> WeightedCoverage:
    """``items`` weights uniform on [0, 1); each element covers a random nonempty subset."""
    if items < 1:
        raise InvalidArgumentError(f"coverage needs at least one item, got {items}")
    weights = _weights(rng, items)
    covers = []
    for _ in range(n):
        size = int(rng.integers(1, max(1, items // 2) + 1))
        covers.append(sorted(int(i) for i in rng.choice(items, size=size, replace=False)))
    return WeightedCoverage(weights, covers)


def random_facility_location(
    rng: np.random.Generator, n: int, clients: int
) -> FacilityLocation:
    """``n x clients`` value matrix uniform on [0, 1)."""
    if clients < 1:
        raise InvalidArgumentError(f"facility location needs at least one client, got {clients}")
    return FacilityLocation(np.round(rng.random((n, clients)), DECIMALS))


def random_modular(rng: np.random.Generator, n: int) -> Modular:
    return Modular(_weights(rng, n))


def contiguous_blocks(n: int, k: int) -> list[list[int]]:
    """Split ``0..n-1`` into ``k`` contiguous near-equal blocks."""
    if not 1 <= k <= n:
        raise InvalidArgumentError(f"block count must lie in 1..{n}, got {k}")
    size, extra = divmod(n, k)
    out, start = [], 0
    for i in range(k):
        end = start + size + (1 if i < extra else 0)
        out.append(list(range(start, end)))
        start = end
    return out


def build_matroid(n: int, params: GenParams) -> Matroid:
    if params.matroid == "uniform":
        r = min(n, 3) if params.rank is None else params.rank
        return Uniform(n, r)
    if params.matroid == "partition":
        k = min(n, 2) if params.blocks is None else params.blocks
        blocks = contiguous_blocks(n, k)
        caps = [min(params.capacity, len(b)) for b in blocks]
        return Partition(n, blocks, caps)
    raise InvalidArgumentError(f"unknown matroid type {params.matroid!r}")


def generate(family: str, n: int, seed: int, params: GenParams = GenParams()) -> Instance:
    """Generate one instance of ``family`` with ``n`` elements from ``seed``."""
    if n < 1:
        raise InvalidArgumentError(f"n must be at least 1, got {n}")
    if params.alpha < 0:
        raise InvalidArgumentError(f"alpha must be nonnegative, got {params.alpha}")
    rng = make_rng(seed)
    objective = random_objective(family, rng, n, params)
    logger.debug("generated {family} n={n} seed={seed}", family=family, n=n, seed=seed)
    return Instance(GroundSet(n), objective, build_matroid(n, params), params.alpha)


def random_objective(
    family: str, rng: np.random.Generator, n: int, params: GenParams = GenParams()
) -> Objective:
    if family == "coverage":
        items = max(n, 4) if params.items is None else params.items
        return random_coverage(rng, n, items)
    if family == "facility_location":
        clients = max(n, 4) if params.clients is None else params.clients
        return random_facility_location(rng, n, clients)
    if family == "modular":
        return random_modular(rng, n)
    raise InvalidArgumentError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def random_bench_instance(
    family: str,
    rng: np.random.Generator,
    *,
    n_max: int,
    rank_max: int,
    alpha_max: int,
    matroid_types: Sequence[str] = ("uniform", "partition"),
) -> Instance:
    """Desk-scale instance for the benchmark harness.

    ``2 <= n <= n_max``, rank at most ``rank_max`` and ``alpha`` drawn from
    ``1..alpha_max`` (exactly 0 when ``alpha_max`` is 0). Partition blocks get capacities
    in ``1..len(block)`` with their total capped by ``rank_max``.
    """
    check_bench_limits(n_max, rank_max, alpha_max)
    n = int(rng.integers(2, n_max + 1))
    kind = matroid_types[int(rng.integers(len(matroid_types)))]
    matroid: Matroid
    if kind == "uniform":
        matroid = Uniform(n, int(rng.integers(1, min(n, rank_max) + 1)))
    else:
        k = int(rng.integers(1, min(n, rank_max) + 1))
        blocks = contiguous_blocks(n, k)
        matroid = Partition(n, blocks, _random_capacities(rng, blocks, rank_max))
    alpha = int(rng.integers(1, alpha_max + 1)) if alpha_max else 0
    objective = random_objective(family, rng, n, GenParams(items=int(rng.integers(3, 2 * n + 2))))
    return Instance(GroundSet(n), objective, matroid, alpha)


def check_bench_limits(n_max: int, rank_max: int, alpha_max: int) -> None:
    if n_max < 2:
        raise InvalidArgumentError(f"n_max must be at least 2, got {n_max}")
    if rank_max < 1:
        raise InvalidArgumentError(f"rank_max must be at least 1, got {rank_max}")
    if alpha_max < 0:
        raise InvalidArgumentError(f"alpha_max must be nonnegative, got {alpha_max}")


def _random_capacities(
    rng: np.random.Generator, blocks: Sequence[Sequence[int]], rank_max: int
) -> list[int]:
    # every block starts at 1 (len(blocks) <= rank_max); the rest of the budget is spread
    spare = rank_max - len(blocks)
    caps = []
    for block in blocks:
        extra = int(rng.integers(0, min(len(block) - 1, spare) + 1))
        spare -= extra
        caps.append(1 + extra)
    return caps
