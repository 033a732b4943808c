"""
Normalized monotone submodular objectives, curvature and exhaustive property checks.

Four objective families are shipped: weighted coverage, facility location, modular and
explicit tables. All of them evaluate canonical element sets (see :mod:`.ground`) and
share an optional bounded evaluation cache.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import ClassVar, Dict, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..config import DEFAULT_CACHE_SIZE
from ..errors import (
    DegenerateObjectiveError,
    InstanceTooLargeError,
    InvalidArgumentError,
)
from .ground import EMPTY, ElementSet, GroundSet, check_element, element_set, without

MAX_EXHAUSTIVE_N = 16
CHECK_TOL = 1e-12


def _as_values(values: Sequence[float] | np.ndarray, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{what} must be finite")
    if np.any(arr < 0):
        raise InvalidArgumentError(f"{what} must be nonnegative")
    return arr


class Objective(ABC):
    """Oracle for a set function over the ground set ``{0, ..., n-1}``.

    Objectives are immutable after construction. The cache is a plain dict keyed by the
    canonical set; once ``cache_size`` entries are stored, new results are simply not
    stored. Concurrent readers may race on a key, which only costs a recomputation.
    """

    family: ClassVar[str]

    def __init__(self, n: int, *, cache_size: int = DEFAULT_CACHE_SIZE) -> None:
        if n < 0:
            raise InvalidArgumentError(f"ground set size must be nonnegative, got {n}")
        self._n = n
        self._cache_size = max(0, cache_size)
        self._cache: Dict[ElementSet, float] = {}

    @property
    def n(self) -> int:
        return self._n

    @property
    def cached_entries(self) -> int:
        return len(self._cache)

    @abstractmethod
    def _compute(self, s: ElementSet) -> float:
        """Evaluate a canonical, validated, nonempty set."""

    def evaluate(self, s: Sequence[int]) -> float:
        """Return ``f(s)``."""
        key = element_set(s, self._n)
        if not key:
            return 0.0
        if self._cache_size:
            hit = self._cache.get(key)
            if hit is not None:
                return hit
        value = self._compute(key)
        if self._cache_size and len(self._cache) < self._cache_size:
            self._cache[key] = value
        return value

    def singleton(self, x: int) -> float:
        """Return ``f({x})``."""
        check_element(x, self._n)
        return self.evaluate((x,))

    def marginal(self, x: int, s: Sequence[int]) -> float:
        """Return ``f(s ∪ {x}) − f(s)``; ``x`` must not belong to ``s``."""
        check_element(x, self._n)
        key = element_set(s, self._n)
        if x in key:
            raise InvalidArgumentError(f"element {x} already belongs to the set")
        return self.evaluate(key + (x,)) - self.evaluate(key)

    def clear_cache(self) -> None:
        self._cache.clear()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self._n})"


class WeightedCoverage(Objective):
    """``f(S)`` = total weight of the items covered by the elements of ``S``."""

    family = "weighted_coverage"

    def __init__(
        self,
        weights: Sequence[float],
        covers: Sequence[Sequence[int]],
        *,
        cache_size: int = DEFAULT_CACHE_SIZE,
    ) -> None:
        super().__init__(len(covers), cache_size=cache_size)
        self._weights = _as_values(weights, "item weights")
        m = len(self._weights)
        self._cover = np.zeros((self.n, m), dtype=bool)
        for e, items in enumerate(covers):
            for item in items:
                if not 0 <= int(item) < m:
                    raise InvalidArgumentError(
                        f"element {e} covers item {item} outside 0..{m - 1}"
                    )
                self._cover[e, int(item)] = True

    @property
    def item_count(self) -> int:
        return len(self._weights)

    @property
    def weights(self) -> Tuple[float, ...]:
        return tuple(float(w) for w in self._weights)

    @property
    def covers(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(i) for i in np.flatnonzero(row)) for row in self._cover)

    def _compute(self, s: ElementSet) -> float:
        covered = self._cover[list(s)].any(axis=0)
        return float(self._weights[covered].sum())


class FacilityLocation(Objective):
    """``f(S) = Σ_j max_{i∈S} value[i][j]`` with ``f(∅) = 0``."""

    family = "facility_location"

    def __init__(
        self,
        values: Sequence[Sequence[float]] | np.ndarray,
        *,
        cache_size: int = DEFAULT_CACHE_SIZE,
    ) -> None:
        arr = _as_values(values, "facility values")
        if arr.ndim != 2:
            raise InvalidArgumentError("facility values must form an n x m matrix")
        super().__init__(arr.shape[0], cache_size=cache_size)
        self._values = arr

    @property
    def client_count(self) -> int:
        return int(self._values.shape[1])

    @property
    def values(self) -> np.ndarray:
        return self._values.copy()

    def _compute(self, s: ElementSet) -> float:
        return float(self._values[list(s)].max(axis=0).sum())


class Modular(Objective):
    """Additive objective ``f(S) = Σ_{a∈S} w[a]``."""

    family = "modular"

    def __init__(
        self, weights: Sequence[float] | np.ndarray, *, cache_size: int = DEFAULT_CACHE_SIZE
    ) -> None:
        arr = _as_values(weights, "modular weights")
        super().__init__(len(arr), cache_size=cache_size)
        self._weights = arr

    @property
    def weights(self) -> Tuple[float, ...]:
        return tuple(float(w) for w in self._weights)

    def marginal(self, x: int, s: Sequence[int]) -> float:
        # exact: the gain never depends on s
        check_element(x, self.n)
        if x in element_set(s, self.n):
            raise InvalidArgumentError(f"element {x} already belongs to the set")
        return float(self._weights[x])

    def _compute(self, s: ElementSet) -> float:
        return float(self._weights[list(s)].sum())


class ExplicitTable(Objective):
    """Objective given by its value on each of the ``2^n`` subsets (binary-counter order)."""

    family = "explicit"

    def __init__(
        self, values: Sequence[float] | np.ndarray, *, cache_size: int = 0
    ) -> None:
        arr = _as_values(values, "table values")
        size = len(arr)
        n = size.bit_length() - 1
        if size < 1 or 1 << n != size:
            raise InvalidArgumentError(f"table length {size} is not a power of two")
        if n > MAX_EXHAUSTIVE_N:
            raise InstanceTooLargeError(f"explicit tables support n <= {MAX_EXHAUSTIVE_N}")
        super().__init__(n, cache_size=cache_size)
        self._table = arr

    @property
    def table(self) -> np.ndarray:
        return self._table.copy()

    def evaluate(self, s: Sequence[int]) -> float:
        # the table may hold a nonzero f(∅); check_normalized must see it
        key = element_set(s, self.n)
        return self._compute(key)

    def _compute(self, s: ElementSet) -> float:
        mask = 0
        for x in s:
            mask |= 1 << x
        return float(self._table[mask])


@dataclass(frozen=True)
class Curvature:
    """Total curvature ``ν`` together with how it was obtained."""

    nu: float
    argmin_element: Optional[int]
    skipped_null_elements: Tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def degenerate(cls, n: int) -> "Curvature":
        """Curvature stand-in for an all-null objective (every value is zero)."""
        return cls(nu=0.0, argmin_element=None, skipped_null_elements=tuple(range(n)))


def evaluate(f: Objective, s: Sequence[int]) -> float:
    """Return ``f(s)``."""
    return f.evaluate(s)


def marginal(f: Objective, x: int, s: Sequence[int]) -> float:
    """Return the marginal gain ``f(s ∪ {x}) − f(s)``."""
    return f.marginal(x, s)


def _check_ground(f: Objective, ground: Optional[GroundSet]) -> None:
    if ground is not None and ground.n != f.n:
        raise InvalidArgumentError(
            f"objective has {f.n} elements but ground set has {ground.n}"
        )


def curvature(f: Objective, ground: Optional[GroundSet] = None) -> Curvature:
    """Compute ``ν = 1 − min_x (f(Ω) − f(Ω∖{x})) / f({x})``.

    Elements with ``f({x}) = 0`` are skipped and reported. Ties in the minimum go to the
    smallest id. The result is clamped to ``[0, 1]``.

    Raises:
        InvalidArgumentError: empty ground set.
        DegenerateObjectiveError: every singleton value is zero.
    """
    _check_ground(f, ground)
    if f.n < 1:
        raise InvalidArgumentError("curvature needs a nonempty ground set")
    full = tuple(range(f.n))
    best: Optional[float] = None
    argmin: Optional[int] = None
    skipped = []
    for x in full:
        single = f.singleton(x)
        if single <= 0.0:
            skipped.append(x)
            continue
        ratio = f.marginal(x, without(full, (x,))) / single
        if best is None or ratio < best:
            best, argmin = ratio, x
    if best is None:
        raise DegenerateObjectiveError("all singleton values are zero; curvature undefined")
    nu = min(1.0, max(0.0, 1.0 - best))
    logger.debug("curvature nu={nu} argmin={x} skipped={s}", nu=nu, x=argmin, s=skipped)
    return Curvature(nu=nu, argmin_element=argmin, skipped_null_elements=tuple(skipped))


def evaluate_all(f: Objective) -> np.ndarray:
    """Values of all ``2^n`` subsets in binary-counter order (bit i ⇔ element i)."""
    if f.n > MAX_EXHAUSTIVE_N:
        raise InstanceTooLargeError(
            f"exhaustive sweep needs n <= {MAX_EXHAUSTIVE_N}, got {f.n}"
        )
    if isinstance(f, ExplicitTable):
        return f.table
    out = np.zeros(1 << f.n, dtype=np.float64)
    for mask in range(1, 1 << f.n):
        s = tuple(i for i in range(f.n) if mask >> i & 1)
        out[mask] = f._compute(s)  # pylint: disable=protected-access
    return out


def _tolerance(table: np.ndarray) -> float:
    return 0.0 if np.array_equal(table, np.round(table)) else CHECK_TOL


def check_normalized(f: Objective) -> bool:
    """``f(∅) = 0``."""
    value = f.evaluate(EMPTY)
    tol = 0.0 if float(value).is_integer() else CHECK_TOL
    return abs(value) <= tol


def check_monotone(f: Objective, ground: Optional[GroundSet] = None) -> bool:
    """``f(S) ≤ f(T)`` for all ``S ⊆ T`` (checked on single-element extensions)."""
    _check_ground(f, ground)
    table = evaluate_all(f)
    tol = _tolerance(table)
    masks = np.arange(1 << f.n)
    for i in range(f.n):
        bit = 1 << i
        base = masks[(masks & bit) == 0]
        if np.any(table[base | bit] < table[base] - tol):
            return False
    return True


def check_submodular(f: Objective, ground: Optional[GroundSet] = None) -> bool:
    """Diminishing returns ``f(S∪{x}) − f(S) ≥ f(T∪{x}) − f(T)`` for all ``S ⊆ T``, ``x ∉ T``.

    Uses the equivalent pairwise form ``f(S+i) + f(S+j) ≥ f(S+i+j) + f(S)``.
    """
    _check_ground(f, ground)
    table = evaluate_all(f)
    tol = _tolerance(table)
    masks = np.arange(1 << f.n)
    for i in range(f.n):
        bi = 1 << i
        for j in range(i + 1, f.n):
            bj = 1 << j
            base = masks[(masks & (bi | bj)) == 0]
            small = table[base | bi] - table[base]
            large = table[base | bi | bj] - table[base | bj]
            if np.any(small < large - tol):
                return False
    return True


def singleton_sums(f: Objective) -> np.ndarray:
    """``Σ_{a∈S} f({a})`` for every subset, in binary-counter order."""
    if f.n > MAX_EXHAUSTIVE_N:
        raise InstanceTooLargeError(
            f"exhaustive sweep needs n <= {MAX_EXHAUSTIVE_N}, got {f.n}"
        )
    masks = np.arange(1 << f.n)
    sums = np.zeros(1 << f.n, dtype=np.float64)
    for i in range(f.n):
        sums[(masks >> i & 1) == 1] += f.singleton(i)
    return sums


def check_curvature_bound(f: Objective, nu: float, *, rel_tol: float = 1e-9) -> bool:
    """``f(S) ≥ (1−ν) Σ_{a∈S} f({a})`` for every subset ``S``."""
    if not 0.0 <= nu <= 1.0:
        raise InvalidArgumentError(f"curvature must lie in [0, 1], got {nu}")
    table = evaluate_all(f)
    rhs = (1.0 - nu) * singleton_sums(f)
    tol = rel_tol * max(1.0, float(table.max(initial=0.0)))
    return bool(np.all(table >= rhs - tol))
