"""Objectives, curvature and the exhaustive property checkers."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resilmax.errors import (
    DegenerateObjectiveError,
    InstanceTooLargeError,
    InvalidArgumentError,
    InvalidElementError,
)
from resilmax.model.generate import make_rng, random_objective
from resilmax.model.ground import GroundSet, from_mask, to_mask
from resilmax.model.objective import (
    ExplicitTable,
    FacilityLocation,
    Modular,
    WeightedCoverage,
    check_curvature_bound,
    check_monotone,
    check_normalized,
    check_submodular,
    curvature,
    evaluate,
    evaluate_all,
    marginal,
)
from tests.conftest import make_w1

FAMILIES = ("coverage", "facility_location", "modular")


def _random(family: str, seed: int, n: int):
    return random_objective(family, make_rng(seed), n)


def test_evaluate_golden(w1, mod321):
    assert evaluate(w1, []) == 0
    assert evaluate(w1, [0, 1]) == 3
    assert evaluate(mod321, [0, 2]) == 4


def test_evaluate_canonicalizes_input(w1):
    assert evaluate(w1, [1, 0, 1]) == evaluate(w1, (0, 1))


def test_evaluate_rejects_out_of_range(w1):
    with pytest.raises(InvalidElementError):
        evaluate(w1, [3])
    with pytest.raises(InvalidElementError):
        evaluate(w1, [-1])


def test_marginal_golden(w1, mod321):
    assert marginal(w1, 1, [0]) == 1
    assert marginal(w1, 2, [1]) == 0
    assert marginal(mod321, 1, [0]) == 2


def test_marginal_rejects_member(w1, mod321):
    with pytest.raises(InvalidArgumentError):
        marginal(w1, 0, [0, 1])
    with pytest.raises(InvalidArgumentError):
        marginal(mod321, 2, [2])


def test_facility_location_value():
    f = FacilityLocation([[1.0, 0.0], [0.5, 2.0]])
    assert f.evaluate([]) == 0
    assert f.evaluate([0]) == 1.0
    assert f.evaluate([0, 1]) == 3.0


def test_constructors_reject_bad_values():
    with pytest.raises(InvalidArgumentError):
        Modular([1.0, -0.5])
    with pytest.raises(InvalidArgumentError):
        Modular([1.0, float("inf")])
    with pytest.raises(InvalidArgumentError):
        WeightedCoverage([1.0], [[0], [1]])
    with pytest.raises(InvalidArgumentError):
        ExplicitTable([0, 1, 2])


def test_explicit_table_limit():
    with pytest.raises(InstanceTooLargeError):
        ExplicitTable(np.zeros(1 << 17))


def test_curvature_golden(w1, w3, mod321):
    assert curvature(mod321).nu == 0.0
    c3 = curvature(w3)
    assert c3.nu == pytest.approx(0.5, abs=1e-12)
    assert c3.argmin_element == 0
    c1 = curvature(w1)
    assert c1.nu == 1.0
    assert c1.argmin_element == 1


def test_curvature_skips_null_elements():
    f = WeightedCoverage([1.0, 1.0], [[0], [], [1]])
    c = curvature(f, GroundSet(3))
    assert c.skipped_null_elements == (1,)
    assert c.argmin_element not in c.skipped_null_elements
    assert c.nu == 0.0


def test_curvature_degenerate_and_empty():
    with pytest.raises(DegenerateObjectiveError):
        curvature(Modular([0.0, 0.0]))
    with pytest.raises(InvalidArgumentError):
        curvature(Modular([]))


def test_curvature_ground_mismatch(w1):
    with pytest.raises(InvalidArgumentError):
        curvature(w1, GroundSet(4))


def test_curvature_one_when_element_fully_redundant():
    # element 1 adds nothing once 0 and 2 are present
    f = WeightedCoverage([0.3, 0.7], [[0], [0, 1], [1]])
    assert curvature(f).nu == 1.0


def test_checkers_on_coverage(w1, w3):
    for f in (w1, w3):
        assert check_normalized(f)
        assert check_monotone(f)
        assert check_submodular(f)


def test_checker_flags_supermodular_table():
    f = ExplicitTable([0, 1, 1, 3])
    assert check_normalized(f)
    assert check_monotone(f)
    assert not check_submodular(f)


def test_checker_accepts_valid_table():
    f = ExplicitTable([0, 2, 1, 2])
    assert check_normalized(f)
    assert check_monotone(f)
    assert check_submodular(f)


def test_checker_flags_non_normalized_and_non_monotone():
    assert not check_normalized(ExplicitTable([1, 1, 1, 1]))
    assert not check_monotone(ExplicitTable([0, 2, 1, 1]))


def test_checker_size_limit():
    with pytest.raises(InstanceTooLargeError):
        check_monotone(Modular(np.ones(17)))


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", [1, 4, 7, 10])
def test_shipped_families_pass_all_checkers(family, n):
    for seed in range(3):
        f = _random(family, seed, n)
        assert check_normalized(f)
        assert check_monotone(f)
        assert check_submodular(f)


def test_evaluate_all_binary_counter_order(w1):
    table = evaluate_all(w1)
    assert len(table) == 8
    for mask in range(8):
        assert table[mask] == w1.evaluate(from_mask(mask))
    assert to_mask((0, 2)) == 5


@given(seed=st.integers(0, 2**32), family=st.sampled_from(FAMILIES), data=st.data())
@settings(max_examples=60, deadline=None)
def test_monotone_and_diminishing_marginals(seed, family, data):
    n = 6
    f = _random(family, seed, n)
    t = data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n - 1))
    s = data.draw(st.lists(st.sampled_from(t), unique=True)) if t else []
    outside = [x for x in range(n) if x not in t]
    x = data.draw(st.sampled_from(outside))
    assert marginal(f, x, s) >= -1e-12
    assert marginal(f, x, s) >= marginal(f, x, t) - 1e-12


@pytest.mark.parametrize("family", FAMILIES)
def test_curvature_bound_chain_exhaustive(family):
    for seed in range(5):
        f = _random(family, seed, 10)
        assert check_curvature_bound(f, curvature(f).nu)


def test_curvature_bound_rejects_bad_nu(w1):
    with pytest.raises(InvalidArgumentError):
        check_curvature_bound(w1, 1.5)


def test_cache_transparency():
    rng = np.random.default_rng(2024)
    for family in FAMILIES:
        cached = random_objective(family, make_rng(11), 9)
        uncached = random_objective(family, make_rng(11), 9)
        for _ in range(1000):
            size = int(rng.integers(0, 10))
            s = rng.choice(9, size=size, replace=False).tolist()
            first = cached.evaluate(s)
            assert cached.evaluate(s) == first
            uncached.clear_cache()
            assert uncached.evaluate(s) == first


def test_cache_stops_growing_when_full():
    f = Modular([1.0, 2.0, 3.0], cache_size=2)
    for s in ([0], [1], [2], [0, 1]):
        f.evaluate(s)
    assert f.cached_entries == 2
    assert f.evaluate([2]) == 3.0


def test_modular_marginal_is_exact_weight():
    f = Modular([0.1, 0.2, 0.3])
    assert f.marginal(2, [0, 1]) == 0.3
    assert curvature(f).nu == 0.0


def test_normalized_for_every_family():
    for family in FAMILIES:
        assert evaluate(_random(family, 5, 4), []) == 0
    assert evaluate(make_w1(), []) == 0
