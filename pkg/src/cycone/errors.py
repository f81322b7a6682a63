"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CyconeError(Exception):
    """Base class for all library errors."""


class DomainError(CyconeError, ValueError):
    """An operation was called outside its mathematical domain."""


class MixedRadicalError(DomainError):
    """Arithmetic would need two distinct irrational radicands."""


class UnsupportedExpressionError(DomainError):
    """A sheaf expression falls outside the evaluable fragment.

    Carries the offending node so callers can report it.
    """

    def __init__(self, node, message: str = ""):
        self.node = node
        detail = message or "expression is not evaluable"
        super().__init__(f"{detail}: {node!r}")


class UnknownBundleError(DomainError):
    """A bundle name is neither a catalog id nor a line-bundle sum."""


class InvariantViolationError(CyconeError):
    """Two independent computations of the same quantity disagree."""
