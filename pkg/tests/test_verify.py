"""Certificates, the proof chain and the bound constants."""

from __future__ import annotations

import numpy as np
import pytest

from resilmax.analysis.base import Finding, failed
from resilmax.analysis.bench import BenchConfig, run_bench
from resilmax.analysis.solvers import (
    solve_exact_resilient,
    solve_greedy_marginal,
    solve_myopic,
    solve_myopic_blockwise,
)
from resilmax.analysis.verify import (
    bound_constants,
    certify,
    check_proof_chain,
    resilient_ratio,
)
from resilmax.errors import InvalidArgumentError, WrongAlgorithmError
from resilmax.model.generate import make_rng, random_objective
from resilmax.model.matroid import Uniform
from resilmax.model.objective import Modular, check_curvature_bound, curvature
from tests.conftest import make_instance, make_w1


def _certify(inst):
    return certify(inst, solve_myopic(inst), solve_exact_resilient(inst))


def test_certify_w1(w1_instance):
    cert = _certify(w1_instance)
    assert cert.value_sol == 2
    assert cert.value_opt == 2
    assert cert.nu.nu == 1.0
    assert cert.bound == 0
    assert cert.theorem_holds
    assert cert.proof_chain.all_hold


def test_certify_modular(mod321_instance):
    cert = _certify(mod321_instance)
    assert (cert.value_sol, cert.value_opt) == (2, 2)
    assert cert.nu.nu == 0.0
    assert cert.bound == 2
    assert cert.ratio == 1
    assert cert.theorem_holds


def test_certify_alpha_at_least_rank():
    inst = make_instance(make_w1(), Uniform(3, 2), 3)
    cert = _certify(inst)
    assert cert.value_sol == cert.value_opt == 0
    assert cert.ratio == 1
    assert cert.theorem_holds
    assert cert.proof_chain.removal_clipped
    assert cert.proof_chain.all_hold


def test_proof_chain_modular(mod321_instance):
    inst = mod321_instance
    chain = check_proof_chain(inst, solve_myopic(inst), solve_exact_resilient(inst))
    assert chain.sol_remainder == (1,)
    assert chain.eq4_lhs == 2
    assert chain.eq4_rhs == 2
    assert chain.bijection.mapping == {0: 0, 1: 1}
    assert chain.eq5_holds
    assert chain.mapped_remainder == (1,)
    assert chain.final_link_holds
    assert chain.all_hold


def test_proof_chain_w3(w3_instance):
    inst = w3_instance
    chain = check_proof_chain(inst, solve_myopic(inst), solve_exact_resilient(inst))
    assert chain.sol_remainder == (1,)
    assert chain.eq4_lhs == 2
    assert chain.eq4_rhs == pytest.approx(1.0, abs=1e-12)
    assert chain.all_hold


def test_proof_chain_no_removal(w1):
    inst = make_instance(w1, Uniform(3, 2), 0)
    sol = solve_myopic(inst)
    chain = check_proof_chain(inst, sol, solve_exact_resilient(inst))
    assert chain.sol_remainder == sol.chosen
    assert chain.all_hold


def test_proof_chain_findings_order(w1_instance):
    inst = w1_instance
    chain = check_proof_chain(inst, solve_myopic(inst), solve_exact_resilient(inst))
    names = [f.name for f in chain.findings()]
    assert names == [
        "curvature_lower_bound",
        "greedy_choice",
        "exchange_substitution",
        "mapped_remainder",
        "final_link",
    ]
    assert failed(chain.findings()) == []
    assert failed([Finding("x", True), Finding("y", False)]) == ["y"]


def test_proof_chain_refuses_other_solvers(w1_instance):
    opt = solve_exact_resilient(w1_instance)
    with pytest.raises(WrongAlgorithmError):
        check_proof_chain(w1_instance, solve_greedy_marginal(w1_instance), opt)
    with pytest.raises(WrongAlgorithmError):
        certify(w1_instance, opt, opt)


def test_proof_chain_accepts_blockwise(partition_instance):
    inst = partition_instance
    sol = solve_myopic_blockwise(inst)
    assert check_proof_chain(inst, sol, solve_exact_resilient(inst)).all_hold


def test_certify_degenerate_objective():
    inst = make_instance(Modular([0.0, 0.0, 0.0]), Uniform(3, 2), 1)
    cert = _certify(inst)
    assert cert.nu.argmin_element is None
    assert cert.theorem_holds
    assert cert.ratio == 1


def test_bound_constants_golden():
    c = bound_constants(0.0)
    assert (c.myopic_bound, c.greedy_resilient_bound, c.greedy_curvature_bound) == (1, 1, 1)
    c = bound_constants(0.5)
    assert c.myopic_bound == 0.5
    assert c.greedy_resilient_bound == pytest.approx(1 / 3)
    c = bound_constants(1.0)
    assert (c.myopic_bound, c.greedy_resilient_bound, c.greedy_curvature_bound) == (0, 0, 0)


def test_bound_constants_rejects_out_of_range():
    for nu in (-0.1, 1.1):
        with pytest.raises(InvalidArgumentError):
            bound_constants(nu)


def test_bound_constant_ordering():
    rng = np.random.default_rng(10)
    for nu in np.concatenate([rng.random(998), [0.0, 1.0]]):
        c = bound_constants(float(nu))
        assert c.myopic_bound >= c.greedy_resilient_bound
        assert c.myopic_bound >= c.greedy_curvature_bound


def test_resilient_ratio_zero_optimum():
    assert resilient_ratio(0.0, 0.0) == 1.0
    assert resilient_ratio(1.0, 2.0) == 0.5


@pytest.mark.parametrize("family", ["coverage", "facility_location", "modular"])
def test_curvature_bound_on_random_sets(family):
    rng = np.random.default_rng(5)
    for seed in range(20):
        f = random_objective(family, make_rng(seed), 9)
        nu = curvature(f).nu
        for _ in range(20):
            s = rng.choice(9, size=int(rng.integers(0, 10)), replace=False).tolist()
            assert f.evaluate(s) >= (1 - nu) * sum(f.singleton(a) for a in s) - 1e-9


def test_curvature_lower_bound_exhaustive_fifty_instances():
    rng = np.random.default_rng(12)
    for i in range(50):
        family = ("coverage", "facility_location", "modular")[i % 3]
        f = random_objective(family, make_rng(1000 + i), int(rng.integers(1, 9)))
        assert check_curvature_bound(f, curvature(f).nu)


@pytest.mark.slow
def test_theorem_and_proof_chain_suite():
    result = run_bench(BenchConfig(trials=300, seed=7, n_max=9, rank_max=4, alpha_max=2))
    assert len(result.rows) == 300
    assert {s.family: s.trials for s in result.summaries} == {
        "coverage": 100,
        "facility_location": 100,
        "modular": 100,
    }
    for row in result.rows:
        tol = 1e-9 * max(1.0, row.exact_value)
        assert row.myopic_value >= (1 - row.nu) * row.exact_value - tol
        assert row.theorem_holds
        assert row.proof_chain_holds
    assert result.violations == 0
