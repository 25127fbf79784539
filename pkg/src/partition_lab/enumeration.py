"""Exhaustive partition generators in decreasing lexicographic order.

These are the brute-force counting oracles the other modules are checked
against, so they deliberately avoid any generating-function shortcut.
"""

from __future__ import annotations

from enum import Enum

from .errors import TooLargeForExhaustion
from .partition import Partition, is_self_conjugate_oracle

__all__ = [
    "EXHAUSTION_LIMIT",
    "PartitionStream",
    "Restriction",
    "count_restricted",
    "partitions_of",
    "partitions_of_dimension",
    "self_conjugate_of_dimension",
]

EXHAUSTION_LIMIT = 60


def _sizes_from(n: int, start: tuple[int, ...] | None):
    """Partitions of ``n`` after ``start`` (or from ``(n,)``), decreasing-lex, as tuples.

    Keeps the parts in a 1-based array with ``h`` pointing at the last part
    larger than 1, so each step only touches the tail.
    """
    if n == 0:
        if start is None:
            yield ()
        return
    x = [1] * (n + 1)
    if start is None:
        x[1] = n
        m = 1
        h = 1 if n > 1 else 0
        yield (n,)
    else:
        m = len(start)
        x[1 : m + 1] = start
        h = m
        while h >= 1 and x[h] == 1:
            h -= 1
    while h >= 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1 : m + 1])


def _dimension_from(d: int, start: tuple[int, ...] | None):
    """Partitions with first part = length = d after ``start``, decreasing-lex."""
    if start is None:
        parts = [d] * d
        yield tuple(parts)
    else:
        parts = list(start)
    while True:
        # the first part is pinned to d; decrement the rightmost free part above 1
        i = d - 1
        while i >= 1 and parts[i] == 1:
            i -= 1
        if i < 1:
            return
        value = parts[i] - 1
        parts[i:] = [value] * (d - i)
        yield tuple(parts)


class PartitionStream:
    """Single-consumer iterator over partitions of a fixed size or dimension.

    ``cursor`` holds the last partition yielded; passing it back as
    ``resume_after`` continues the enumeration from that point.
    """

    def __init__(
        self,
        *,
        size: int | None = None,
        dimension: int | None = None,
        self_conjugate: bool = False,
        predicate=None,
        resume_after: Partition | None = None,
    ) -> None:
        if (size is None) == (dimension is None):
            raise ValueError("exactly one of size or dimension is required")
        if size is not None and size < 0:
            raise ValueError(f"size must be nonnegative, got {size}")
        if dimension is not None and dimension < 1:
            raise ValueError(f"dimension must be positive, got {dimension}")
        start = None
        if resume_after is not None:
            start = resume_after.parts
            if size is not None and resume_after.size != size:
                raise ValueError(f"{resume_after} is not a partition of {size}")
            if dimension is not None and not (
                resume_after.first == resume_after.length == dimension
            ):
                raise ValueError(f"{resume_after} does not have dimension {dimension}")
        self.size = size
        self.dimension = dimension
        self.self_conjugate = self_conjugate
        self.predicate = predicate
        self.cursor = resume_after
        if size is not None:
            self._raw = _sizes_from(size, start)
        else:
            self._raw = _dimension_from(dimension, start)

    def __iter__(self):
        return self

    def __next__(self) -> Partition:
        for parts in self._raw:
            p = Partition._trusted(parts)
            if self.self_conjugate and not is_self_conjugate_oracle(p):
                continue
            if self.predicate is not None and not self.predicate(p):
                continue
            self.cursor = p
            return p
        raise StopIteration

    def count(self) -> int:
        """Exhaust the stream and return how many partitions it yielded."""
        if not self.self_conjugate and self.predicate is None:
            n = 0
            last = None
            for last in self._raw:
                n += 1
            if last is not None:
                self.cursor = Partition._trusted(last)
            return n
        return sum(1 for _ in self)


def partitions_of(n: int) -> PartitionStream:
    return PartitionStream(size=n)


def partitions_of_dimension(d: int) -> PartitionStream:
    return PartitionStream(dimension=d)


def self_conjugate_of_dimension(d: int) -> PartitionStream:
    return PartitionStream(dimension=d, self_conjugate=True)


class Restriction(Enum):
    NONE = "none"
    ODD_PARTS = "odd"
    DISTINCT_PARTS = "distinct"


def _odd_only(p: Partition) -> bool:
    return all(x % 2 for x in p.parts)


def _distinct(p: Partition) -> bool:
    parts = p.parts
    return all(a > b for a, b in zip(parts, parts[1:]))


def count_restricted(n: int, restriction: Restriction = Restriction.NONE) -> int:
    """Count partitions of ``n`` passing ``restriction`` by exhaustion (n <= 60)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > EXHAUSTION_LIMIT:
        raise TooLargeForExhaustion(
            f"n={n} exceeds the exhaustion limit {EXHAUSTION_LIMIT}; use the series module"
        )
    predicate = {
        Restriction.NONE: None,
        Restriction.ODD_PARTS: _odd_only,
        Restriction.DISTINCT_PARTS: _distinct,
    }[restriction]
    return PartitionStream(size=n, predicate=predicate).count()
