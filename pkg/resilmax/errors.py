"""
Exception hierarchy shared by every resilmax module.
"""

from __future__ import annotations


class ResilMaxError(Exception):
    """Base class for all resilmax errors."""


class InvalidElementError(ResilMaxError, ValueError):
    """Raised when an element id lies outside the ground set."""


class InvalidArgumentError(ResilMaxError, ValueError):
    """Raised when an argument violates an operation's precondition."""


class DegenerateObjectiveError(ResilMaxError):
    """Raised when every singleton value is zero, so curvature is undefined."""


class InstanceTooLargeError(ResilMaxError):
    """Raised when an exhaustive sweep is requested on too large a ground set."""


class NotABaseError(ResilMaxError):
    """Raised when a set expected to be a matroid base is not one."""


class BudgetExceededError(ResilMaxError):
    """Raised when an enumeration would exceed its configured cap."""

    def __init__(self, what: str, count: int, cap: int) -> None:
        super().__init__(f"{what}: {count} candidates exceed cap {cap}")
        self.what = what
        self.count = count
        self.cap = cap


class WrongAlgorithmError(ResilMaxError):
    """Raised when a check requires a solution from a specific solver."""


class InstanceParseError(ResilMaxError):
    """Raised when an instance file is malformed."""


class ConfigError(ResilMaxError):
    """Raised when environment configuration is invalid."""
