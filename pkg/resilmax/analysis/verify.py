"""
Certification of the ``(1 − ν)`` guarantee for myopic solutions.

``certify`` compares a myopic solution against the exhaustive optimum and re-checks each
inequality of the argument behind the bound on the concrete instance:

- curvature lower bound: ``f(R) ≥ (1−ν) Σ_{a∈R} f({a})`` for the myopic remainder ``R``;
- greedy choice: ``f({a}) ≥ f({π(a)})`` for the exchange bijection ``π`` onto the optimum;
- the substituted sum and its submodular collapse onto ``R* = π(R)``;
- final link: ``f(R*) ≥ f(R(A★))`` since ``R*`` is a feasible remainder of ``A★``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

from loguru import logger

from ..config import DEFAULT_ADVERSARY_CAP
from ..errors import DegenerateObjectiveError, InvalidArgumentError, WrongAlgorithmError
from ..model.ground import ElementSet
from ..model.instance import Instance
from ..model.matroid import ExchangeBijection
from ..model.objective import Curvature, curvature
from .adversary import worst_case_removal_exact
from .base import Finding, failed
from .solvers import MYOPIC_ALGORITHMS, Solution

REL_TOL = 1e-9


@dataclass(frozen=True)
class BoundConstants:
    """Approximation factors as functions of curvature."""

    myopic_bound: float
    greedy_resilient_bound: float
    greedy_curvature_bound: float


@dataclass(frozen=True)
class ProofChainReport:
    """Each inequality of the chain evaluated on one instance."""

    sol_remainder: ElementSet
    eq4_lhs: float
    eq4_rhs: float
    eq4_holds: bool
    bijection: ExchangeBijection
    eq5_holds: bool
    eq5_violations: Tuple[Tuple[int, int], ...]
    eq6_rhs: float
    eq6_holds: bool
    mapped_remainder: ElementSet
    mapped_value: float
    eq7_rhs: float
    eq7_holds: bool
    opt_remainder_value: float
    final_link_holds: bool
    removal_clipped: bool
    all_hold: bool

    def findings(self) -> List[Finding]:
        """The chain as a list of named checks, in proof order."""
        return [
            Finding(
                "curvature_lower_bound",
                self.eq4_holds,
                f"f(R_sol)={self.eq4_lhs:.12g} >= (1-nu)*sum f(a)={self.eq4_rhs:.12g}",
                {"remainder": list(self.sol_remainder)},
            ),
            Finding(
                "greedy_choice",
                self.eq5_holds,
                "f(a) >= f(pi(a)) for every selected a",
                {"pi": dict(self.bijection.mapping), "violations": list(self.eq5_violations)},
            ),
            Finding(
                "exchange_substitution",
                self.eq6_holds,
                f"f(R_sol)={self.eq4_lhs:.12g} >= (1-nu)*sum f(pi(a))={self.eq6_rhs:.12g}",
            ),
            Finding(
                "mapped_remainder",
                self.eq7_holds,
                f"f(R_sol)={self.eq4_lhs:.12g} >= (1-nu)*f(R*)={self.eq7_rhs:.12g}",
                {"mapped_remainder": list(self.mapped_remainder)},
            ),
            Finding(
                "final_link",
                self.final_link_holds,
                f"f(R*)={self.mapped_value:.12g} >= f(R(A_opt))={self.opt_remainder_value:.12g}",
                {"removal_clipped": self.removal_clipped},
            ),
        ]


@dataclass(frozen=True)
class Certificate:
    """Outcome of checking ``f(R(A_sol)) ≥ (1−ν) f(R(A★))`` on one instance."""

    nu: Curvature
    value_sol: float
    value_opt: float
    bound: float
    ratio: float
    theorem_holds: bool
    proof_chain: ProofChainReport
    tolerance: float = field(default=0.0)


def tolerance(value_opt: float) -> float:
    """Absolute tolerance ``1e-9 * max(1, value_opt)``."""
    return REL_TOL * max(1.0, value_opt)


def instance_curvature(inst: Instance) -> Curvature:
    """Curvature of the instance objective; an all-null objective reports ``ν = 0``."""
    try:
        return curvature(inst.objective, inst.ground)
    except DegenerateObjectiveError:
        logger.debug("all singletons null; using nu=0")
        return Curvature.degenerate(inst.n)


def resilient_ratio(value: float, value_opt: float) -> float:
    """``value / value_opt``, defined as 1 when the optimum is 0."""
    return value / value_opt if value_opt > 0 else 1.0


def check_proof_chain(
    inst: Instance,
    sol: Solution,
    opt: Solution,
    *,
    nu: Optional[Curvature] = None,
    cap: int = DEFAULT_ADVERSARY_CAP,
) -> ProofChainReport:
    """Evaluate every link of the bound's argument for a myopic ``sol`` and optimal ``opt``.

    Raises:
        WrongAlgorithmError: ``sol`` was not produced by myopic selection.
        NotABaseError: either chosen set is not a base.
        BudgetExceededError: the exact adversary is over ``cap``.
    """
    if sol.algorithm not in MYOPIC_ALGORITHMS:
        raise WrongAlgorithmError(
            f"greedy-choice step only holds for myopic solutions, got {sol.algorithm!r}"
        )
    f = inst.objective
    curv = instance_curvature(inst) if nu is None else nu
    scale = 1.0 - curv.nu

    rem_sol = worst_case_removal_exact(f, sol.chosen, inst.alpha, cap)
    rem_opt = worst_case_removal_exact(f, opt.chosen, inst.alpha, cap)
    tol = tolerance(rem_opt.value)

    lhs = rem_sol.value
    eq4_rhs = scale * sum(f.singleton(a) for a in rem_sol.remaining)

    pi = inst.matroid.exchange_bijection(sol.chosen, opt.chosen)
    violations = tuple(
        (a, pi(a)) for a in sol.chosen if f.singleton(a) < f.singleton(pi(a)) - tol
    )
    eq6_rhs = scale * sum(f.singleton(pi(a)) for a in rem_sol.remaining)

    mapped = pi.image(rem_sol.remaining)
    mapped_value = f.evaluate(mapped)
    eq7_rhs = scale * mapped_value

    report = ProofChainReport(
        sol_remainder=rem_sol.remaining,
        eq4_lhs=lhs,
        eq4_rhs=eq4_rhs,
        eq4_holds=lhs >= eq4_rhs - tol,
        bijection=pi,
        eq5_holds=not violations,
        eq5_violations=violations,
        eq6_rhs=eq6_rhs,
        eq6_holds=lhs >= eq6_rhs - tol,
        mapped_remainder=mapped,
        mapped_value=mapped_value,
        eq7_rhs=eq7_rhs,
        eq7_holds=lhs >= eq7_rhs - tol,
        opt_remainder_value=rem_opt.value,
        final_link_holds=mapped_value >= rem_opt.value - tol,
        removal_clipped=inst.alpha > len(sol.chosen),
        all_hold=False,
    )
    broken = failed(report.findings())
    if broken:
        logger.debug("proof chain fails at {names}", names=broken)
    return replace(report, all_hold=not broken)


def certify(
    inst: Instance,
    sol: Solution,
    opt: Solution,
    *,
    cap: int = DEFAULT_ADVERSARY_CAP,
) -> Certificate:
    """Check the ``(1 − ν)`` bound for ``sol`` against the optimum ``opt``."""
    curv = instance_curvature(inst)
    chain = check_proof_chain(inst, sol, opt, nu=curv, cap=cap)
    value_sol = chain.eq4_lhs
    value_opt = chain.opt_remainder_value
    tol = tolerance(value_opt)
    bound = (1.0 - curv.nu) * value_opt
    holds = value_sol >= bound - tol
    if not holds or not chain.all_hold:
        logger.warning(
            "certification failed: value_sol={s} bound={b} chain={c}",
            s=value_sol,
            b=bound,
            c=chain.all_hold,
        )
    return Certificate(
        nu=curv,
        value_sol=value_sol,
        value_opt=value_opt,
        bound=bound,
        ratio=resilient_ratio(value_sol, value_opt),
        theorem_holds=holds,
        proof_chain=chain,
        tolerance=tol,
    )


def bound_constants(nu: float) -> BoundConstants:
    """``1−ν``, ``(1−ν)/(1+ν)`` and ``(1−ν)(1−e^{−ν})/ν`` (limit 1 at ``ν = 0``)."""
    if not 0.0 <= nu <= 1.0:
        raise InvalidArgumentError(f"curvature must lie in [0, 1], got {nu}")
    myopic = 1.0 - nu
    decay = 1.0 if nu == 0.0 else -math.expm1(-nu) / nu
    return BoundConstants(
        myopic_bound=myopic,
        greedy_resilient_bound=myopic / (1.0 + nu),
        greedy_curvature_bound=myopic * decay,
    )
