"""Search budgets and the tri-state UNKNOWN marker.

The witness searches in this package are exhaustive, so they are bounded:
spanning-tree enumeration, induced-path enumeration per vertex pair, the
attachment chain depth, and wall-clock time. A search that exhausts its
space returns a definite answer; one cut short by a bound reports UNKNOWN
instead of guessing.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

__all__ = ["Budget", "UNKNOWN"]


class _Unknown:
    """Singleton marker for budget-limited answers.

    Test with ``result is UNKNOWN``. Truth-testing raises, so a stray
    ``if result:`` on a tri-state value fails loudly instead of silently
    treating UNKNOWN as truthy.
    """

    _instance = None

    def __new__(cls) -> "_Unknown":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __bool__(self) -> bool:
        raise TypeError("UNKNOWN has no truth value; compare with 'is UNKNOWN'")


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class Budget:
    """Resource limits shared by the searches.

    tree_limit caps how many spanning trees an enumeration may examine,
    path_limit caps induced-path enumeration per vertex pair, max_t caps
    the attachment chain parameter t, and time_budget_ms caps wall time.

    A budget is started once at the top-level call; nested searches inherit
    the same absolute deadline, so one wall budget covers the whole
    operation rather than resetting per inner search.
    """

    tree_limit: int = 10**6
    path_limit: int = 10**5
    max_t: int = 3
    time_budget_ms: int = 30_000
    deadline: float | None = None

    def started(self) -> "Budget":
        if self.deadline is not None:
            return self
        return replace(self, deadline=time.monotonic() + self.time_budget_ms / 1000.0)

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline
