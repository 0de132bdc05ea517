"""Exception hierarchy shared by every circlab module."""

from __future__ import annotations


class CirclabError(Exception):
    """Base class for all circlab errors."""


class DomainError(CirclabError, ValueError):
    """An argument lies outside the domain of the operation."""


class CapacityError(CirclabError, ValueError):
    """A graph or enumeration exceeds a configured size cap."""


class Graph6Error(CirclabError, ValueError):
    """Malformed graph6 input.

    ``offset`` is the index of the offending character in the input, or
    ``None`` when the problem is the overall length.
    """

    def __init__(self, message: str, offset: int | None = None) -> None:
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)
        self.offset = offset


class SpecError(CirclabError, ValueError):
    """A family specification violates one of its parameter constraints."""


class CountOverflowError(CirclabError, OverflowError):
    """An exact count no longer fits the 128-bit counter."""


class BudgetExceeded(CirclabError):
    """A cooperative time budget ran out before the search finished."""
