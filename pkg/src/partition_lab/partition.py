"""Partition value type, conjugation, addition, slicing and text diagrams."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import reduce
from itertools import groupby

from .errors import (
    CutOutOfRange,
    EmptyPartition,
    InvalidMultiplicity,
    NonPositivePart,
    NotNonIncreasing,
)

__all__ = [
    "EMPTY",
    "MultiplicityForm",
    "Partition",
    "add",
    "conjugate",
    "dimension",
    "from_multiplicities",
    "from_parts",
    "from_unordered",
    "is_self_conjugate_oracle",
    "render_ferrers",
    "render_young",
    "split_contiguous",
    "to_multiplicities",
]


@dataclass(frozen=True, slots=True)
class Partition:
    """A non-increasing tuple of positive parts, largest first.

    The empty tuple is the empty partition (size 0), which is the additive
    identity and counts as the single partition of 0.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, part in enumerate(parts):
            if part < 1:
                raise NonPositivePart(f"part {part} at index {i} is not positive")
            if i and part > parts[i - 1]:
                raise NotNonIncreasing(
                    f"part {part} at index {i} exceeds preceding part {parts[i - 1]}"
                )

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> Partition:
        # Skips validation; callers guarantee the invariant.
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        return obj

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __add__(self, other: Partition) -> Partition:
        if not isinstance(other, Partition):
            return NotImplemented
        return add(self, other)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


EMPTY = Partition()


@dataclass(frozen=True, slots=True)
class MultiplicityForm:
    """Run-length form of a partition: ``(value, multiplicity)`` pairs, values strictly decreasing."""

    runs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        runs = tuple((int(v), int(m)) for v, m in self.runs)
        object.__setattr__(self, "runs", runs)
        for i, (value, mult) in enumerate(runs):
            if value < 1:
                raise NonPositivePart(f"run value {value} is not positive")
            if mult < 1:
                raise InvalidMultiplicity(f"run ({value}, {mult}) has non-positive multiplicity")
            if i and value >= runs[i - 1][0]:
                raise NotNonIncreasing("run values must be strictly decreasing")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.runs)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.runs)

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)


def from_parts(raw: Iterable[int]) -> Partition:
    """Build a partition, rejecting non-positive or out-of-order entries."""
    return Partition(tuple(int(x) for x in raw))


def from_unordered(raw: Iterable[int]) -> Partition:
    """Build a partition from parts in any order."""
    return Partition(tuple(sorted((int(x) for x in raw), reverse=True)))


def from_multiplicities(form: MultiplicityForm | Iterable[tuple[int, int]]) -> Partition:
    if not isinstance(form, MultiplicityForm):
        form = MultiplicityForm(tuple(form))
    return Partition._trusted(tuple(v for v, m in form.runs for _ in range(m)))


def to_multiplicities(p: Partition) -> MultiplicityForm:
    return MultiplicityForm(tuple((v, len(list(g))) for v, g in groupby(p.parts)))


def conjugate(p: Partition) -> Partition:
    """Transpose the diagram: part ``k`` of the result counts parts ``>= k``."""
    parts = p.parts
    out = []
    count = len(parts)
    for k in range(1, p.first + 1):
        while count and parts[count - 1] < k:
            count -= 1
        out.append(count)
    return Partition._trusted(tuple(out))


def is_self_conjugate_oracle(p: Partition) -> bool:
    """Ground truth: conjugate and compare part for part."""
    return conjugate(p).parts == p.parts


def dimension(p: Partition) -> int | None:
    """Return ``d`` when first part == number of parts == d, else None."""
    if not p.parts:
        raise EmptyPartition("dimension is undefined for the empty partition")
    return p.first if p.first == p.length else None


def add(p: Partition, q: Partition) -> Partition:
    """Multiset union of parts, re-sorted."""
    return Partition._trusted(tuple(sorted(p.parts + q.parts, reverse=True)))


def split_contiguous(p: Partition, cuts: Sequence[int]) -> list[Partition]:
    """Cut ``p`` into contiguous slices before each index in ``cuts``.

    ``cuts`` must be strictly increasing positions in ``[1, length-1]``.
    """
    prev = 0
    for c in cuts:
        if not (1 <= c <= p.length - 1) or c <= prev:
            raise CutOutOfRange(f"cut {c} invalid for partition of length {p.length}")
        prev = c
    bounds = [0, *cuts, p.length]
    return [Partition._trusted(p.parts[a:b]) for a, b in zip(bounds, bounds[1:])]


def add_all(pieces: Iterable[Partition]) -> Partition:
    return reduce(add, pieces, EMPTY)


def render_young(p: Partition) -> str:
    return "".join("#" * part + "\n" for part in p.parts)


def render_ferrers(p: Partition) -> str:
    return "".join(" ".join("*" * part) + "\n" for part in p.parts)
