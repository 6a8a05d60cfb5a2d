"""Integer partitions stored as part -> multiplicity maps.

A partition of ``n`` labels a conjugacy class of the symmetric group S_n;
its symmetry factor is the order of the centralizer of any permutation in
that class.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from math import factorial

__all__ = ["Partition", "partitions_of", "sym_factor", "partition_sum"]


@dataclass(frozen=True)
class Partition:
    """Immutable multiset of positive parts.

    ``items`` holds ``(part, multiplicity)`` pairs sorted by increasing part,
    with every multiplicity positive. Use :meth:`from_counts` or
    :meth:`from_parts` rather than the raw constructor.
    """

    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 0
        for part, mult in self.items:
            if part <= prev:
                raise ValueError(f"parts must be positive and strictly increasing: {self.items}")
            if mult < 1:
                raise ValueError(f"multiplicity of part {part} must be positive")
            prev = part

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> Partition:
        return cls(tuple(sorted((p, m) for p, m in counts.items() if m)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        return cls.from_counts(counts)

    @property
    def weight(self) -> int:
        return sum(p * m for p, m in self.items)

    @property
    def parts(self) -> tuple[int, ...]:
        """Flat part list in non-increasing order."""
        return tuple(p for p, m in reversed(self.items) for _ in range(m))

    def multiplicity(self, part: int) -> int:
        return dict(self.items).get(part, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def __add__(self, other: Partition) -> Partition:
        if not isinstance(other, Partition):
            return NotImplemented
        if not other.items:
            return self
        if not self.items:
            return other
        counts = dict(self.items)
        for p, m in other.items:
            counts[p] = counts.get(p, 0) + m
        return Partition(tuple(sorted(counts.items())))

    def __len__(self) -> int:
        return sum(m for _, m in self.items)

    def __repr__(self) -> str:
        body = ", ".join(f"{p}:{m}" for p, m in self.items)
        return f"Partition({{{body}}})"


EMPTY = Partition()


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` exactly once.

    Order is descending-lexicographic on the non-increasing part list, so
    ``partitions_of(4)`` yields 4, 3+1, 2+2, 2+1+1, 1+1+1+1. ``n == 0``
    yields the empty partition only.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    for parts in _descending(n, n):
        yield Partition.from_parts(parts)


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def sym_factor(mu: Partition) -> int:
    """Return prod_i i**m_i * m_i!, the centralizer order of the class ``mu``."""
    out = 1
    for part, mult in mu.items:
        out *= part**mult * factorial(mult)
    return out


def partition_sum(a: Partition, b: Partition) -> Partition:
    """Multiplicity-wise union of two partitions."""
    return a + b
