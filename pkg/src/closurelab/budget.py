"""Search budgets: node counters and wall-clock limits.

Every potentially expensive search (closure backtrack, base-size
branch-and-bound, subgroup enumeration) charges nodes against a Budget.
Exhausting the budget raises BudgetExceededError; there is no silent
truncation anywhere in the package.
"""

from __future__ import annotations

import os
import time

from .errors import BudgetExceededError

ENV_BUDGET_NODES = "CLOSURELAB_BUDGET_NODES"
DEFAULT_BUDGET_NODES = 20_000_000
DEFAULT_MAX_DEGREE = 5000


def default_budget_nodes() -> int:
    """Node allowance from the environment, else the built-in default."""
    raw = os.environ.get(ENV_BUDGET_NODES)
    if raw is None:
        return DEFAULT_BUDGET_NODES
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_BUDGET_NODES
    return value if value > 0 else DEFAULT_BUDGET_NODES


class Budget:
    """Mutable node/time meter threaded through searches."""

    __slots__ = ("max_nodes", "max_seconds", "nodes", "_t0")

    def __init__(self, max_nodes: int | None = None, max_seconds: float | None = None):
        self.max_nodes = default_budget_nodes() if max_nodes is None else max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self._t0 = time.monotonic()

    def charge(self, n: int = 1, partial=None) -> None:
        """Consume n nodes; raise when either limit is exhausted."""
        self.nodes += n
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"node budget exhausted ({self.nodes} > {self.max_nodes})", partial=partial
            )
        # Time is only sampled every charge; fine at the granularity we need.
        if self.max_seconds is not None and time.monotonic() - self._t0 > self.max_seconds:
            raise BudgetExceededError(
                f"time budget exhausted (> {self.max_seconds:g}s)", partial=partial
            )

    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self._t0) * 1000)
