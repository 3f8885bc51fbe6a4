"""Node-count budgets for exhaustive searches."""

from __future__ import annotations

DEFAULT_BUDGET = 10**6


class BudgetExceeded(Exception):
    pass


class Budget:
    """Counts search nodes; ``tick`` raises once ``limit`` is passed."""

    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None = DEFAULT_BUDGET):
        self.limit = limit
        self.nodes = 0

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(self.nodes)


def as_budget(budget: "Budget | int | None") -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_BUDGET if budget is None else budget)
