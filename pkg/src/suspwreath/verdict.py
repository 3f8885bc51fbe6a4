"""Three-valued results of property checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a check plus whatever certifies it.

    ``certificate`` is a positive witness when the property holds (a shelling,
    a matching, a decision tree ...) and an obstruction when it fails.
    """

    status: str
    certificate: Any = None
    nodes_explored: int = 0
    reason: str = ""

    def __post_init__(self):
        if self.status not in (HOLDS, FAILS, UNKNOWN):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    @property
    def decided(self) -> bool:
        return self.status != UNKNOWN
