from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional


@dataclass
class OperationCounter:
    """Named step counters used to check linear-time bounds.

    Each phase bumps its own key; ``total`` sums every key.
    """

    counts: Counter = field(default_factory=Counter)

    def add(self, key: str, amount: int = 1) -> None:
        self.counts[key] += amount

    def __getitem__(self, key: str) -> int:
        return self.counts[key]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def as_dict(self) -> Dict[str, int]:
        return dict(self.counts)


def bump(counter: Optional[OperationCounter], key: str, amount: int = 1) -> None:
    """Increment ``key`` when a counter is attached"""
    if counter is not None:
        counter.counts[key] += amount
