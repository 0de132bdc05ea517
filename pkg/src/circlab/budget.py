"""Cooperative time budget for long searches."""

from __future__ import annotations

import time

from .errors import BudgetExceeded, DomainError


class Budget:
    """Deadline checked cooperatively by search loops.

    ``check()`` is cheap; the wall clock is only consulted every ``stride``
    calls.  The deadline is absolute (``time.time()``), so a budget can be
    shipped to worker processes and still refer to the same instant.
    """

    def __init__(self, seconds: float | None = None, *, deadline: float | None = None, stride: int = 2048):
        if seconds is not None:
            if seconds <= 0:
                raise DomainError("time budget must be positive")
            deadline = time.time() + seconds
        self.deadline = deadline
        self.stride = stride
        self._ticks = 0

    def __getstate__(self):
        return {"deadline": self.deadline, "stride": self.stride}

    def __setstate__(self, state):
        self.deadline = state["deadline"]
        self.stride = state["stride"]
        self._ticks = 0

    @property
    def expired(self) -> bool:
        return self.deadline is not None and time.time() >= self.deadline

    def check(self) -> None:
        if self.deadline is None:
            return
        self._ticks += 1
        if self._ticks >= self.stride:
            self._ticks = 0
            if time.time() >= self.deadline:
                raise BudgetExceeded("time budget exhausted")


UNLIMITED = Budget()
