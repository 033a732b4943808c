"""
Uniform and partition matroids: independence, rank, base enumeration and the
basis-exchange bijection between two bases.
"""

from __future__ import annotations

import itertools
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar, Dict, Iterator, Mapping, Sequence, Tuple

from ..errors import InvalidArgumentError, NotABaseError
from .ground import ElementSet, check_element, element_set


@dataclass(frozen=True)
class ExchangeBijection:
    """Mapping ``π`` from base ``A`` onto base ``B``, identity on ``A ∩ B``."""

    mapping: Dict[int, int]

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    @property
    def domain(self) -> ElementSet:
        return tuple(sorted(self.mapping))

    def image(self, s: Sequence[int]) -> ElementSet:
        """``{π(a) : a ∈ s}`` in canonical form."""
        return tuple(sorted(self.mapping[a] for a in s))


class Matroid(ABC):
    """Independence oracle over the ground set ``{0, ..., n-1}``."""

    kind: ClassVar[str]

    def __init__(self, n: int) -> None:
        if n < 0:
            raise InvalidArgumentError(f"ground set size must be nonnegative, got {n}")
        self._n = n

    @property
    def n(self) -> int:
        return self._n

    @property
    @abstractmethod
    def rank(self) -> int:
        """Size of every base."""

    @abstractmethod
    def is_independent(self, s: Sequence[int]) -> bool:
        """Independence test for a set of valid ids."""

    @abstractmethod
    def can_add(self, s: ElementSet, x: int) -> bool:
        """Whether ``s ∪ {x}`` is independent, given ``s`` independent and ``x ∉ s``."""

    @abstractmethod
    def base_count(self) -> int:
        """Number of bases."""

    @abstractmethod
    def bases(self) -> Iterator[ElementSet]:
        """Enumerate every base as a canonical set."""

    @abstractmethod
    def partition(self) -> Tuple[Tuple[ElementSet, ...], Tuple[int, ...]]:
        """Blocks and capacities; a uniform matroid is one block of capacity ``rank``."""

    @abstractmethod
    def _match(self, a_only: ElementSet, b_only: ElementSet) -> Dict[int, int]:
        """Pair the elements exclusive to each base."""

    def is_base(self, s: Sequence[int]) -> bool:
        key = element_set(s, self._n)
        return len(key) == self.rank and self.is_independent(key)

    def exchange_bijection(self, a: Sequence[int], b: Sequence[int]) -> ExchangeBijection:
        """Build ``π : A → B``: identity on ``A ∩ B``, ascending-id matching elsewhere."""
        base_a = element_set(a, self._n)
        base_b = element_set(b, self._n)
        for name, base in (("A", base_a), ("B", base_b)):
            if not self.is_base(base):
                raise NotABaseError(f"{name}={list(base)} is not a base of {self!r}")
        in_b = set(base_b)
        in_a = set(base_a)
        mapping = {x: x for x in base_a if x in in_b}
        a_only = tuple(x for x in base_a if x not in in_b)
        b_only = tuple(x for x in base_b if x not in in_a)
        mapping.update(self._match(a_only, b_only))
        return ExchangeBijection(mapping=dict(sorted(mapping.items())))


class Uniform(Matroid):
    """Every set of at most ``r`` elements is independent."""

    kind = "uniform"

    def __init__(self, n: int, r: int) -> None:
        super().__init__(n)
        if not 0 <= r <= n:
            raise InvalidArgumentError(f"uniform rank must lie in 0..{n}, got {r}")
        self._r = r

    @property
    def rank(self) -> int:
        return self._r

    def is_independent(self, s: Sequence[int]) -> bool:
        return len(element_set(s, self.n)) <= self._r

    def can_add(self, s: ElementSet, x: int) -> bool:
        return len(s) < self._r

    def base_count(self) -> int:
        return math.comb(self.n, self._r)

    def bases(self) -> Iterator[ElementSet]:
        return itertools.combinations(range(self.n), self._r)

    def partition(self) -> Tuple[Tuple[ElementSet, ...], Tuple[int, ...]]:
        return (tuple(range(self.n)),), (self._r,)

    def _match(self, a_only: ElementSet, b_only: ElementSet) -> Dict[int, int]:
        return dict(zip(a_only, b_only))

    def __repr__(self) -> str:
        return f"Uniform(n={self.n}, r={self._r})"


class Partition(Matroid):
    """Blocks with per-block capacity limits."""

    kind = "partition"

    def __init__(
        self, n: int, blocks: Sequence[Sequence[int]], capacities: Sequence[int]
    ) -> None:
        super().__init__(n)
        if len(blocks) != len(capacities):
            raise InvalidArgumentError(
                f"{len(blocks)} blocks but {len(capacities)} capacities"
            )
        block_of = [-1] * n
        canon = []
        for k, block in enumerate(blocks):
            for x in block:
                check_element(int(x), n)
                if block_of[int(x)] != -1:
                    raise InvalidArgumentError(f"element {x} appears in more than one block")
                block_of[int(x)] = k
            canon.append(tuple(sorted(int(x) for x in block)))
        missing = [x for x, k in enumerate(block_of) if k == -1]
        if missing:
            raise InvalidArgumentError(f"blocks do not cover elements {missing}")
        for k, (block, cap) in enumerate(zip(canon, capacities)):
            if not 0 <= cap <= len(block):
                raise InvalidArgumentError(
                    f"capacity {cap} of block {k} must lie in 0..{len(block)}"
                )
        self._blocks: Tuple[ElementSet, ...] = tuple(canon)
        self._capacities: Tuple[int, ...] = tuple(int(c) for c in capacities)
        self._block_of: Tuple[int, ...] = tuple(block_of)

    @property
    def blocks(self) -> Tuple[ElementSet, ...]:
        return self._blocks

    @property
    def capacities(self) -> Tuple[int, ...]:
        return self._capacities

    def block_of(self, x: int) -> int:
        check_element(x, self.n)
        return self._block_of[x]

    @property
    def rank(self) -> int:
        return sum(self._capacities)

    def _counts(self, s: Sequence[int]) -> Mapping[int, int]:
        counts: Dict[int, int] = {}
        for x in s:
            k = self._block_of[x]
            counts[k] = counts.get(k, 0) + 1
        return counts

    def is_independent(self, s: Sequence[int]) -> bool:
        counts = self._counts(element_set(s, self.n))
        return all(c <= self._capacities[k] for k, c in counts.items())

    def can_add(self, s: ElementSet, x: int) -> bool:
        k = self._block_of[x]
        used = sum(1 for y in s if self._block_of[y] == k)
        return used < self._capacities[k]

    def base_count(self) -> int:
        return math.prod(math.comb(len(b), c) for b, c in zip(self._blocks, self._capacities))

    def bases(self) -> Iterator[ElementSet]:
        per_block = [
            itertools.combinations(b, c) for b, c in zip(self._blocks, self._capacities)
        ]
        for parts in itertools.product(*per_block):
            yield tuple(sorted(itertools.chain.from_iterable(parts)))

    def partition(self) -> Tuple[Tuple[ElementSet, ...], Tuple[int, ...]]:
        return self._blocks, self._capacities

    def _match(self, a_only: ElementSet, b_only: ElementSet) -> Dict[int, int]:
        # bases saturate every block, so exclusive counts agree block by block
        out: Dict[int, int] = {}
        for k in range(len(self._blocks)):
            left = [x for x in a_only if self._block_of[x] == k]
            right = [x for x in b_only if self._block_of[x] == k]
            out.update(zip(left, right))
        return out

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, blocks={self._blocks}, capacities={self._capacities})"


def is_independent(m: Matroid, s: Sequence[int]) -> bool:
    """Whether ``s`` is independent in ``m``."""
    return m.is_independent(s)


def rank(m: Matroid) -> int:
    """Rank of ``m``."""
    return m.rank


def exchange_bijection(m: Matroid, a: Sequence[int], b: Sequence[int]) -> ExchangeBijection:
    """Exchange bijection from base ``a`` onto base ``b``."""
    return m.exchange_bijection(a, b)


def verify_exchange(
    m: Matroid, a: Sequence[int], pi: ExchangeBijection | Mapping[int, int]
) -> bool:
    """Check bijectivity, identity on ``A ∩ π(A)`` and single-swap independence."""
    if not isinstance(pi, ExchangeBijection):
        pi = ExchangeBijection(dict(pi))
    mapping = pi.mapping
    base = element_set(a, m.n)
    if pi.domain != base:
        return False
    images = [mapping[x] for x in base]
    if any(not 0 <= y < m.n for y in images):
        return False
    if len(set(images)) != len(images):
        return False
    image_set = set(images)
    for x in base:
        if x in image_set and mapping[x] != x:
            return False
    for x in base:
        swapped = [y for y in base if y != x] + [mapping[x]]
        if not m.is_independent(swapped):
            return False
    return True
