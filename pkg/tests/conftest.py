"""
Golden instances shared across the suite.

W1: coverage over three unit-weight items, e0→{0,1}, e1→{1,2}, e2→{2}.
W3: coverage over items u0, u1, s (unit weights), e0→{u0,s}, e1→{u1,s}.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict

import pytest

from resilmax.model.ground import GroundSet
from resilmax.model.instance import Instance
from resilmax.model.matroid import Matroid, Partition, Uniform
from resilmax.model.objective import Modular, Objective, WeightedCoverage


def make_w1() -> WeightedCoverage:
    return WeightedCoverage([1, 1, 1], [[0, 1], [1, 2], [2]])


def make_w3() -> WeightedCoverage:
    return WeightedCoverage([1, 1, 1], [[0, 2], [1, 2]])


def make_instance(f: Objective, m: Matroid, alpha: int) -> Instance:
    return Instance(GroundSet(f.n), f, m, alpha)


@pytest.fixture
def w1() -> WeightedCoverage:
    return make_w1()


@pytest.fixture
def w3() -> WeightedCoverage:
    return make_w3()


@pytest.fixture
def mod321() -> Modular:
    return Modular([3, 2, 1])


@pytest.fixture
def w1_instance() -> Instance:
    return make_instance(make_w1(), Uniform(3, 2), 1)


@pytest.fixture
def w3_instance() -> Instance:
    return make_instance(make_w3(), Uniform(2, 2), 1)


@pytest.fixture
def mod321_instance() -> Instance:
    return make_instance(Modular([3, 2, 1]), Uniform(3, 2), 1)


@pytest.fixture
def partition_instance() -> Instance:
    return make_instance(Modular([2, 1, 3, 1]), Partition(4, [[0, 1], [2, 3]], [1, 1]), 1)


W1_DOC: Dict[str, Any] = {
    "n": 3,
    "objective": {
        "type": "weighted_coverage",
        "weights": [1, 1, 1],
        "covers": [[0, 1], [1, 2], [2]],
    },
    "matroid": {"type": "uniform", "rank": 2},
    "alpha": 1,
}

W3_DOC: Dict[str, Any] = {
    "n": 2,
    "objective": {"type": "weighted_coverage", "weights": [1, 1, 1], "covers": [[0, 2], [1, 2]]},
    "matroid": {"type": "uniform", "rank": 2},
    "alpha": 1,
}

MOD321_DOC: Dict[str, Any] = {
    "n": 3,
    "objective": {"type": "modular", "weights": [3, 2, 1]},
    "matroid": {"type": "uniform", "rank": 2},
    "alpha": 1,
}


@pytest.fixture
def write_doc(tmp_path: Path) -> Callable[..., str]:
    """Write an instance document (optionally patched) and return its path."""

    def _write(doc: Dict[str, Any], name: str = "instance.json", **patch: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps({**doc, **patch}), encoding="utf-8")
        return str(path)

    return _write
