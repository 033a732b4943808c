"""Uniform and partition matroids and the exchange bijection."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from resilmax.errors import InvalidArgumentError, NotABaseError
from resilmax.model.generate import contiguous_blocks
from resilmax.model.matroid import (
    ExchangeBijection,
    Partition,
    Uniform,
    exchange_bijection,
    is_independent,
    rank,
    verify_exchange,
)


@pytest.fixture
def two_blocks() -> Partition:
    return Partition(4, [[0, 1], [2, 3]], [1, 1])


def test_independence_golden(two_blocks):
    assert not is_independent(Uniform(3, 2), [0, 1, 2])
    assert is_independent(two_blocks, [0, 2])
    assert not is_independent(two_blocks, [0, 1])


def test_rank_golden():
    assert rank(Uniform(5, 3)) == 3
    assert rank(Partition(5, [[0], [1, 2, 3, 4]], [1, 2])) == 3
    assert rank(Uniform(4, 0)) == 0


def test_partition_validation():
    with pytest.raises(InvalidArgumentError):
        Partition(3, [[0, 1], [1, 2]], [1, 1])
    with pytest.raises(InvalidArgumentError):
        Partition(3, [[0, 1]], [1])
    with pytest.raises(InvalidArgumentError):
        Partition(3, [[0, 1], [2]], [1, 2])
    with pytest.raises(InvalidArgumentError):
        Uniform(3, 4)


def test_bijection_golden(two_blocks):
    pi = exchange_bijection(Uniform(3, 2), [0, 1], [1, 2])
    assert pi.mapping == {0: 2, 1: 1}
    pi = exchange_bijection(two_blocks, [0, 2], [1, 3])
    assert pi.mapping == {0: 1, 2: 3}
    assert verify_exchange(two_blocks, [0, 2], pi)
    pi = exchange_bijection(two_blocks, [0, 3], [0, 3])
    assert pi.mapping == {0: 0, 3: 3}


def test_bijection_requires_bases(two_blocks):
    with pytest.raises(NotABaseError):
        exchange_bijection(two_blocks, [0], [1, 3])
    with pytest.raises(NotABaseError):
        exchange_bijection(two_blocks, [0, 2], [0, 1])


def test_verify_exchange_rejects(two_blocks):
    assert not verify_exchange(Uniform(3, 2), [0, 1], {0: 1, 1: 1})
    assert not verify_exchange(two_blocks, [0, 2], {0: 3, 2: 1})
    assert not verify_exchange(two_blocks, [0, 2], {0: 2, 2: 0})
    assert not verify_exchange(two_blocks, [0, 2], {0: 1})


def test_bijection_image():
    pi = ExchangeBijection({0: 2, 1: 1})
    assert pi.image([0, 1]) == (1, 2)
    assert pi(0) == 2
    assert pi.domain == (0, 1)


def _random_matroids(rng: np.random.Generator, count: int):
    for _ in range(count):
        n = int(rng.integers(1, 11))
        yield Uniform(n, int(rng.integers(0, n + 1)))
        k = int(rng.integers(1, n + 1))
        blocks = contiguous_blocks(n, k)
        caps = [int(rng.integers(0, len(b) + 1)) for b in blocks]
        yield Partition(n, blocks, caps)


def _random_base(rng: np.random.Generator, m):
    blocks, caps = m.partition()
    out = []
    for block, cap in zip(blocks, caps):
        out.extend(int(x) for x in rng.choice(block, size=cap, replace=False))
    return sorted(out)


def test_bijection_suite():
    rng = np.random.default_rng(6)
    checked = {"uniform": 0, "partition": 0}
    for m in _random_matroids(rng, 100):
        a, b = _random_base(rng, m), _random_base(rng, m)
        assert m.is_base(a) and m.is_base(b)
        pi = exchange_bijection(m, a, b)
        assert verify_exchange(m, a, pi)
        assert sorted(pi.mapping.values()) == b
        for x in set(a) & set(b):
            assert pi(x) == x
        if isinstance(m, Partition):
            assert all(m.block_of(x) == m.block_of(pi(x)) for x in a)
        checked[m.kind] += 1
    assert checked == {"uniform": 100, "partition": 100}


def test_hereditary_property():
    rng = np.random.default_rng(3)
    for m in _random_matroids(rng, 30):
        for _ in range(10):
            s = sorted(rng.choice(m.n, size=int(rng.integers(0, m.n + 1)), replace=False))
            if not m.is_independent(s):
                continue
            for k in range(len(s)):
                for sub in itertools.combinations(s, k):
                    assert m.is_independent(sub)


def test_augmentation_property_exhaustive():
    for m in (
        Uniform(6, 3),
        Partition(6, [[0, 1, 2], [3, 4], [5]], [2, 1, 1]),
        Partition(5, [[0, 1], [2, 3, 4]], [1, 2]),
    ):
        independent = [
            s for k in range(m.n + 1) for s in itertools.combinations(range(m.n), k)
            if m.is_independent(s)
        ]
        for s in independent:
            for t in independent:
                if len(s) < len(t):
                    assert any(m.is_independent(s + (x,)) for x in t if x not in s)


def test_base_enumeration_counts():
    m = Partition(5, [[0, 1], [2, 3, 4]], [1, 2])
    bases = list(m.bases())
    assert len(bases) == m.base_count() == 6
    assert all(m.is_base(b) for b in bases)
    assert list(Uniform(3, 0).bases()) == [()]
