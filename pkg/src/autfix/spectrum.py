"""The divisor-indexed fixed-point spectrum shared by all enumerators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from autfix.errors import InvalidInputError
from autfix.modarith import divisors


@dataclass(frozen=True)
class Spectrum:
    """Counts of automorphisms by the exact size of their fixed-point set.

    ``counts`` has one key per divisor of ``order``, zero counts included.
    """

    group: str
    order: int
    counts: Mapping[int, int] = field(compare=True)

    @classmethod
    def from_sizes(cls, group: str, order: int, sizes: Iterable[int]) -> Spectrum:
        """Tally fixed-set sizes, one per automorphism."""
        return cls.from_counter(group, order, Counter(sizes))

    @classmethod
    def from_counter(cls, group: str, order: int, tally: Mapping[int, int]) -> Spectrum:
        ds = divisors(order)
        stray = set(tally) - set(ds)
        if stray:
            # Lagrange: a fixed-point subgroup always has divisor order
            raise InvalidInputError(f"fixed-set sizes {sorted(stray)} do not divide {order}")
        return cls(group, order, {d: int(tally.get(d, 0)) for d in ds})

    @property
    def mass(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, d: int) -> int:
        return self.counts[d]

    def items(self):
        return sorted(self.counts.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())


def merge_counters(parts: Iterable[Mapping[int, int]]) -> Counter:
    """Additive, order-independent merge of partial tallies."""
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return total


@dataclass(frozen=True)
class Check:
    """One named expected-vs-actual comparison."""

    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected,
                "actual": self.actual, "pass": self.passed}
