"""Worst-case removals."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from resilmax.analysis.adversary import (
    resilient_value,
    worst_case_removal,
    worst_case_removal_exact,
    worst_case_removal_greedy,
)
from resilmax.errors import BudgetExceededError, InvalidArgumentError
from resilmax.model.generate import make_rng, random_objective
from resilmax.model.ground import without

FAMILIES = ("coverage", "facility_location", "modular")


def test_exact_golden(w1, mod321):
    rem = worst_case_removal_exact(w1, [0, 1], 1)
    assert rem.removed == (0,)
    assert rem.remaining == (1,)
    assert rem.value == 2
    assert rem.exact

    rem = worst_case_removal_exact(mod321, [0, 1, 2], 2)
    assert rem.removed == (0, 1)
    assert rem.value == 1


def test_no_removal_budget(w1):
    rem = worst_case_removal_exact(w1, [0, 2], 0)
    assert rem.removed == ()
    assert rem.value == w1.evaluate([0, 2])
    rem = worst_case_removal_greedy(w1, [0, 2], 0)
    assert rem.removed == ()
    assert rem.value == w1.evaluate([0, 2])


def test_greedy_golden(w1, mod321):
    rem = worst_case_removal_greedy(w1, [0, 1, 2], 2)
    assert rem.removed == (0, 1)
    assert rem.value == 1
    assert not rem.exact
    rem = worst_case_removal_greedy(mod321, [0, 1, 2], 1)
    assert rem.removed == (0,)
    assert rem.value == 3


def test_resilient_value_golden(w1, w3):
    assert resilient_value(w1, [0, 1], 1) == 2
    assert resilient_value(w3, [0, 1], 1) == 2
    assert resilient_value(w1, [0, 1], 5) == 0


def test_budget(w1):
    with pytest.raises(BudgetExceededError):
        worst_case_removal_exact(w1, [0, 1, 2], 1, cap=2)
    rem = worst_case_removal(w1, [0, 1, 2], 2, cap=2)
    assert not rem.exact
    assert rem.value == 1


def test_negative_alpha(w1):
    with pytest.raises(InvalidArgumentError):
        worst_case_removal_exact(w1, [0], -1)


def test_removal_invariants(w1):
    for a in ([], [0], [0, 1, 2]):
        for alpha in range(4):
            rem = worst_case_removal_exact(w1, a, alpha)
            assert set(rem.removed) <= set(a)
            assert len(rem.removed) == min(alpha, len(a))
            assert rem.remaining == without(tuple(a), rem.removed)
            assert rem.value == w1.evaluate(rem.remaining)


@pytest.mark.parametrize("family", FAMILIES)
def test_oracle_agreement(family):
    rng = np.random.default_rng(8)
    for seed in range(6):
        f = random_objective(family, make_rng(seed), 12)
        size = int(rng.integers(1, 13))
        a = tuple(sorted(int(x) for x in rng.choice(12, size=size, replace=False)))
        for alpha in range(4):
            exact = worst_case_removal_exact(f, a, alpha)
            for k in range(min(alpha, len(a)) + 1):
                for b in itertools.combinations(a, k):
                    value = f.evaluate(without(a, b))
                    # covers smaller removals too: they never beat the full-size optimum
                    assert exact.value <= value
            assert worst_case_removal_greedy(f, a, alpha).value >= exact.value


def test_resilient_value_monotone_in_nested_sets():
    rng = np.random.default_rng(4)
    for seed in range(20):
        f = random_objective("coverage", make_rng(seed), 8)
        big = tuple(sorted(int(x) for x in rng.choice(8, size=5, replace=False)))
        small = tuple(sorted(int(x) for x in rng.choice(big, size=3, replace=False)))
        for alpha in (1, 2):
            assert resilient_value(f, big, alpha) >= resilient_value(f, small, alpha) - 1e-12
