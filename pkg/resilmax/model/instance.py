"""
Problem instance: objective, matroid and removal budget over one ground set.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InvalidArgumentError
from .ground import GroundSet
from .matroid import Matroid
from .objective import Objective


@dataclass(frozen=True)
class Instance:
    """Resilient maximization instance ``(f, Ω, I, α)``."""

    ground: GroundSet
    objective: Objective
    matroid: Matroid
    alpha: int

    def __post_init__(self) -> None:
        if self.objective.n != self.ground.n:
            raise InvalidArgumentError(
                f"objective has {self.objective.n} elements, ground set has {self.ground.n}"
            )
        if self.matroid.n != self.ground.n:
            raise InvalidArgumentError(
                f"matroid has {self.matroid.n} elements, ground set has {self.ground.n}"
            )
        if self.alpha < 0:
            raise InvalidArgumentError(f"alpha must be nonnegative, got {self.alpha}")

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def rank(self) -> int:
        return self.matroid.rank
