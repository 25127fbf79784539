"""Self-conjugacy from multiplicities, special shapes, nest-and-egg peeling, area balance."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import EmptyPartition, FrameTooWide, InconsistentFrames
from .partition import MultiplicityForm, Partition, to_multiplicities

__all__ = [
    "AreaBalance",
    "NestEggDecomposition",
    "PrefixCheck",
    "Shape",
    "ShapeClass",
    "area_balance",
    "check_size_equality",
    "classify_shape",
    "decompose_nest_egg",
    "frame_widths",
    "is_self_conjugate",
    "is_self_conjugate_theorem",
    "prefix_ledger",
    "recompose",
    "remove_outer_frame",
    "step_value",
]


@dataclass(frozen=True)
class PrefixCheck:
    """One comparison of the multiplicity test.

    ``value`` is a distinct part, ``terms`` the multiplicities whose sum it
    must equal (largest part's multiplicity first).
    """

    value: int
    terms: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.terms)

    @property
    def ok(self) -> bool:
        return self.value == self.total


def prefix_ledger(form: MultiplicityForm) -> list[PrefixCheck]:
    """Comparisons of the multiplicity test, largest distinct part first.

    The distinct part in position ``j`` (0 = largest, of ``r`` distinct parts)
    is compared with the sum of the multiplicities of the ``r - j`` largest
    parts. The list stops after the first failing comparison.
    """
    mults = form.multiplicities
    r = len(mults)
    checks = []
    for j, value in enumerate(form.values):
        check = PrefixCheck(value, mults[: r - j])
        checks.append(check)
        if not check.ok:
            break
    return checks


def is_self_conjugate_theorem(form: MultiplicityForm) -> bool:
    """Decide self-conjugacy from part multiplicities alone, with no diagram."""
    mults = form.multiplicities
    running = 0
    prefix = []
    for m in mults:
        running += m
        prefix.append(running)
    # smallest value must equal first prefix sum, largest value the full sum
    return all(v == s for v, s in zip(reversed(form.values), prefix))


def is_self_conjugate(p: Partition) -> bool:
    return is_self_conjugate_theorem(to_multiplicities(p))


def check_size_equality(p: Partition) -> bool:
    """Necessary condition: the first part equals the number of parts."""
    if not p:
        raise EmptyPartition("size equality is undefined for the empty partition")
    return p.first == p.length


class Shape(Enum):
    EMPTY = "Empty"
    DURFEE_SQUARE = "PureDurfeeSquare"
    FANCY_TRIANGLE = "FancyTriangle"
    FANCY_L = "FancyL"
    OTHER = "Other"


@dataclass(frozen=True)
class ShapeClass:
    shape: Shape
    dim: int | None = None

    @property
    def is_egg(self) -> bool:
        return self.shape in (Shape.EMPTY, Shape.DURFEE_SQUARE, Shape.FANCY_TRIANGLE)

    def __str__(self) -> str:
        return self.shape.value if self.dim is None else f"{self.shape.value}({self.dim})"


def classify_shape(p: Partition) -> ShapeClass:
    """Match square, then staircase, then L; anything else is Other."""
    parts = p.parts
    if not parts:
        return ShapeClass(Shape.EMPTY)
    d = parts[0]
    if len(parts) != d:
        return ShapeClass(Shape.OTHER)
    if all(x == d for x in parts):
        return ShapeClass(Shape.DURFEE_SQUARE, d)
    if all(x == d - i for i, x in enumerate(parts)):
        return ShapeClass(Shape.FANCY_TRIANGLE, d)
    if all(x == 1 for x in parts[1:]):
        return ShapeClass(Shape.FANCY_L, d)
    return ShapeClass(Shape.OTHER)


def egg_partition(egg: ShapeClass) -> Partition:
    if egg.shape is Shape.EMPTY:
        return Partition()
    if egg.shape is Shape.DURFEE_SQUARE:
        return Partition._trusted((egg.dim,) * egg.dim)
    if egg.shape is Shape.FANCY_TRIANGLE:
        return Partition._trusted(tuple(range(egg.dim, 0, -1)))
    raise InconsistentFrames(f"{egg} is not a valid egg")


def remove_outer_frame(p: Partition, j: int) -> Partition:
    """Strip the first ``j`` rows and the first ``j`` columns."""
    if j < 1 or p.length < j or p.first < j:
        raise FrameTooWide(f"cannot remove {j} rows and columns from {p}")
    return Partition._trusted(tuple(x - j for x in p.parts[j:] if x > j))


def wrap_frame(inner: Partition, arm: int) -> Partition:
    """Surround ``inner`` with a unit-width symmetric L whose row and column have length ``arm``."""
    if arm < inner.first + 1 or arm < inner.length + 1:
        raise InconsistentFrames(f"frame of arm {arm} cannot enclose {inner}")
    return Partition._trusted(
        (arm,) + tuple(x + 1 for x in inner.parts) + (1,) * (arm - 1 - inner.length)
    )


@dataclass(frozen=True)
class NestEggDecomposition:
    """Unit-width frames (outermost first, by arm length), the egg, and any residual.

    ``residual`` is set only when peeling hit a frame whose row and column
    lengths differ, which happens exactly for non-self-conjugate input.
    """

    frames: tuple[int, ...]
    egg: ShapeClass | None
    residual: Partition | None = None

    @property
    def ok(self) -> bool:
        return self.residual is None


def decompose_nest_egg(p: Partition) -> NestEggDecomposition:
    frames = []
    current = p
    while True:
        shape = classify_shape(current)
        if shape.is_egg:
            return NestEggDecomposition(tuple(frames), shape)
        if current.first != current.length:
            return NestEggDecomposition(tuple(frames), None, current)
        frames.append(current.first)
        current = remove_outer_frame(current, 1)


def recompose(decomp: NestEggDecomposition) -> Partition:
    if decomp.residual is not None or decomp.egg is None:
        raise InconsistentFrames("cannot recompose a failed decomposition")
    current = egg_partition(decomp.egg)
    for arm in reversed(decomp.frames):
        current = wrap_frame(current, arm)
    return current


def frame_widths(frames: Sequence[int]) -> list[int]:
    """Merge runs of unit frames whose arms drop by exactly 1 into wide Ls.

    A width-w L is w unit frames with arms a, a-1, ..., a-w+1.
    """
    widths: list[int] = []
    for i, arm in enumerate(frames):
        if i and frames[i - 1] - arm == 1:
            widths[-1] += 1
        else:
            widths.append(1)
    return widths


def step_value(p: Partition, x) -> int:
    """The step function of ``p``: part ``i`` on ``[i, i+1)``, 0 past the last part."""
    if x < 0:
        raise ValueError("step function is defined for x >= 0")
    i = int(x // 1)
    return p.parts[i] if i < p.length else 0


@dataclass(frozen=True)
class AreaBalance:
    below: Fraction
    above: Fraction

    @property
    def balanced(self) -> bool:
        return self.below == self.above


def _integrate_min(height: int, a: int, b: int) -> Fraction:
    """Exact integral of min(height, x) over [a, b]."""
    cross = min(max(Fraction(height), Fraction(a)), Fraction(b))
    under_diag = (cross * cross - a * a) / 2
    return under_diag + height * (b - cross)


def area_balance(p: Partition) -> AreaBalance:
    """Areas of the step diagram on each side of the line y = x.

    ``below`` integrates min(f, x) over [0, length], ``above`` integrates
    max(f - x, 0); together they always add up to the size.
    """
    if not p:
        raise EmptyPartition("area balance is undefined for the empty partition")
    below = Fraction(0)
    above = Fraction(0)
    for i, height in enumerate(p.parts):
        lower = _integrate_min(height, i, i + 1)
        below += lower
        above += height - lower
    return AreaBalance(below, above)
