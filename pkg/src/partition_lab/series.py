"""Truncated power series with exact integer coefficients and partition generating functions."""

from __future__ import annotations

import threading
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from .errors import FormMismatch

__all__ = [
    "PartSet",
    "TruncatedSeries",
    "p_exact",
    "p_exact_recurrence",
    "series_product_bounded",
    "series_product_unrestricted",
]


class TruncatedSeries:
    """Power series in q known exactly up to and including q**order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int | None = None) -> None:
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, coeff: int, exponent: int, order: int) -> TruncatedSeries:
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        shown = ", ".join(map(str, self.coeffs[:8]))
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order})"

    def _common(self, other: TruncatedSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._common(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._common(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        nonzero_b = [(j, bj) for j, bj in enumerate(b[: n + 1]) if bj]
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j, bj in nonzero_b:
                if i + j > n:
                    break
                out[i + j] += ai * bj
        return TruncatedSeries(out, n)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, min(order, self.order))

    # Factor updates used by the generating-function products. Each works in
    # place on a coefficient list and never touches exponents above the order.

    @staticmethod
    def _times_geometric(c: list[int], step: int) -> None:
        # c *= 1 + q^step + q^(2 step) + ...
        for i in range(step, len(c)):
            c[i] += c[i - step]

    @staticmethod
    def _times_one_minus(c: list[int], step: int) -> None:
        # c *= 1 - q^step
        for i in range(len(c) - 1, step - 1, -1):
            c[i] -= c[i - step]

    @staticmethod
    def _times_finite_geometric(c: list[int], step: int, terms: int) -> None:
        # c *= 1 + q^step + ... + q^((terms-1) step), multiplied out directly
        src = list(c)
        for t in range(1, terms):
            shift = t * step
            if shift >= len(c):
                break
            for i in range(shift, len(c)):
                c[i] += src[i - shift]


class PartKind(Enum):
    ALL = "all"
    ODD = "odd"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class PartSet:
    """Allowed part sizes: all positive integers, the odd ones, or an explicit list."""

    kind: PartKind
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind is PartKind.EXPLICIT:
            vals = tuple(sorted(set(int(v) for v in self.values)))
            if vals and vals[0] < 1:
                raise ValueError("explicit part sizes must be positive")
            object.__setattr__(self, "values", vals)
        elif self.values:
            raise ValueError(f"{self.kind} part set takes no explicit values")

    @classmethod
    def all_positive(cls) -> PartSet:
        return cls(PartKind.ALL)

    @classmethod
    def odds(cls) -> PartSet:
        return cls(PartKind.ODD)

    @classmethod
    def explicit(cls, values: Iterable[int]) -> PartSet:
        return cls(PartKind.EXPLICIT, tuple(values))

    def __contains__(self, v: int) -> bool:
        if v < 1:
            return False
        if self.kind is PartKind.ALL:
            return True
        if self.kind is PartKind.ODD:
            return v % 2 == 1
        return v in self.values

    def members_up_to(self, bound: int) -> list[int]:
        if self.kind is PartKind.ALL:
            return list(range(1, bound + 1))
        if self.kind is PartKind.ODD:
            return list(range(1, bound + 1, 2))
        return [v for v in self.values if v <= bound]


_cache: dict[tuple[PartSet, int | None, int], TruncatedSeries] = {}
_cache_lock = threading.Lock()


def _cached(parts: PartSet, d: int | None, order: int) -> TruncatedSeries | None:
    # Entries are never removed or replaced, so lock-free reads are safe.
    best = None
    for (kind, dd, n), s in list(_cache.items()):
        if kind == parts and dd == d and n >= order and (best is None or n < best.order):
            best = s
    return best.truncate(order) if best is not None else None


def _store(parts: PartSet, d: int | None, series: TruncatedSeries) -> None:
    with _cache_lock:
        _cache.setdefault((parts, d, series.order), series)


def series_product_unrestricted(parts: PartSet, order: int) -> TruncatedSeries:
    """Product over allowed sizes v <= order of 1/(1 - q^v): counts partitions into those sizes."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    hit = _cached(parts, None, order)
    if hit is not None:
        return hit
    c = [1] + [0] * order
    for v in parts.members_up_to(order):
        TruncatedSeries._times_geometric(c, v)
    result = TruncatedSeries(c, order)
    _store(parts, None, result)
    return result


def series_product_bounded(parts: PartSet, d: int, order: int) -> TruncatedSeries:
    """Generating function for partitions into allowed sizes, each used at most ``d`` times.

    Built twice: from the finite factors 1 + q^v + ... + q^(dv), and from
    (1 - q^((d+1)v)) / (1 - q^v). The two must agree.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if d < 1:
        raise ValueError("d must be at least 1")
    hit = _cached(parts, d, order)
    if hit is not None:
        return hit
    members = parts.members_up_to(order)
    direct = [1] + [0] * order
    for v in members:
        TruncatedSeries._times_finite_geometric(direct, v, d + 1)
    quotient = [1] + [0] * order
    for v in members:
        TruncatedSeries._times_one_minus(quotient, (d + 1) * v)
        TruncatedSeries._times_geometric(quotient, v)
    if direct != quotient:
        bad = next(i for i, (a, b) in enumerate(zip(direct, quotient)) if a != b)
        raise FormMismatch(
            f"finite-factor and quotient forms differ at q^{bad}: {direct[bad]} != {quotient[bad]}"
        )
    result = TruncatedSeries(direct, order)
    _store(parts, d, result)
    return result


def euler_product_inverse(order: int) -> TruncatedSeries:
    """Product over 1 <= v <= order of (1 - q^v)."""
    c = [1] + [0] * order
    for v in range(1, order + 1):
        TruncatedSeries._times_one_minus(c, v)
    return TruncatedSeries(c, order)


def p_exact(n: int) -> int:
    """Number of partitions of ``n`` from the generating-function product."""
    if n < 0:
        return 0
    hit = _cached(PartSet.all_positive(), None, n)
    if hit is None:
        # grow geometrically so increasing queries amortize
        largest = max((k[2] for k in _cache if k[0].kind is PartKind.ALL and k[1] is None), default=0)
        hit = series_product_unrestricted(PartSet.all_positive(), max(n, 2 * largest, 64))
    return hit[n]


_recurrence_memo = [1]
_recurrence_lock = threading.Lock()


def _pentagonal_offsets(n: int) -> Sequence[tuple[int, int]]:
    out = []
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        out.append((g1, sign))
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            out.append((g2, sign))
        k += 1
    return out


def p_exact_recurrence(n: int) -> int:
    """Number of partitions of ``n`` from Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    with _recurrence_lock:
        memo = _recurrence_memo
        for m in range(len(memo), n + 1):
            memo.append(sum(sign * memo[m - g] for g, sign in _pentagonal_offsets(m)))
        return memo[n]
