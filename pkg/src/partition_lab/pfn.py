"""Rademacher's convergent series for p(n), and partition congruence scans.

The root of unity inside A_k(n) is taken as exp(pi*i*s(h, k)) with s the
Dedekind sum. Any other convention breaks agreement with the exact counts
immediately, which the tests rely on.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd

import mpmath

from .errors import ImaginaryResidueTooLarge, NotCoprime, PrecisionExhausted
from .series import p_exact

__all__ = [
    "ATKIN_STEPS",
    "CongruenceFamily",
    "CongruenceReport",
    "DEFAULT_DIGITS",
    "CLASSICAL_LISTS",
    "RAMANUJAN_FAMILIES",
    "RademacherResult",
    "atkin_family",
    "atkin_modulus",
    "chowla_check",
    "dedekind_reciprocity_rhs",
    "dedekind_sum",
    "kloosterman_like_sum",
    "rademacher_p",
    "rademacher_term",
    "scan_congruences",
]


def _default_digits() -> int:
    env = os.environ.get("PARTITION_LAB_DIGITS")
    return int(env) if env else 40


DEFAULT_DIGITS = _default_digits()


def _sawtooth(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


@lru_cache(maxsize=4096)
def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h, k) = sum over 1 <= mu < k of ((mu/k)) ((h mu/k)), exactly.

    Accepts 0 <= h < k with gcd(h, k) = 1, so (0, 1) is allowed and gives 0.
    """
    if k < 1 or not 0 <= h < k:
        raise ValueError(f"need 0 <= h < k, got h={h}, k={k}")
    if gcd(h, k) != 1:
        raise NotCoprime(f"gcd({h}, {k}) = {gcd(h, k)}")
    return sum(
        (_sawtooth(Fraction(mu, k)) * _sawtooth(Fraction(h * mu, k)) for mu in range(1, k)),
        Fraction(0),
    )


def dedekind_reciprocity_rhs(h: int, k: int) -> Fraction:
    """Right side of s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12."""
    return Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12


def kloosterman_like_sum(n: int, k: int, digits: int | None = None):
    """A_k(n): sum over h mod k, gcd(h, k) = 1, of exp(pi i s(h,k)) exp(-2 pi i n h / k).

    Returns the real part as an mpmath float; the imaginary part must vanish
    to within 10**-(digits - 10).
    """
    if k < 1:
        raise ValueError("k must be positive")
    digits = digits or DEFAULT_DIGITS
    with mpmath.workdps(digits + 10):
        total = mpmath.mpc(0)
        for h in range(k):
            if gcd(h, k) != 1:
                continue
            # phase / pi, reduced mod 2 in exact arithmetic before going to floats
            phase = (dedekind_sum(h, k) - Fraction(2 * n * h, k)) % 2
            total += mpmath.expjpi(mpmath.mpf(phase.numerator) / phase.denominator)
        tol = mpmath.mpf(10) ** (-(digits - 10))
        if abs(total.imag) > tol:
            raise ImaginaryResidueTooLarge(f"Im A_{k}({n}) = {mpmath.nstr(total.imag, 5)}")
        # cancellation to rounding noise means an exact zero
        result = mpmath.mpf(0) if abs(total.real) < tol else +total.real
    return result


def rademacher_term(n: int, k: int, digits: int | None = None):
    """The k-th summand of Rademacher's series at n, with the derivative taken in closed form."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    digits = digits or DEFAULT_DIGITS
    a_k = kloosterman_like_sum(n, k, digits)
    with mpmath.workdps(digits + 10):
        if a_k == 0:
            return mpmath.mpf(0)
        u = mpmath.mpf(n) - mpmath.mpf(1) / 24
        c = mpmath.pi / k * mpmath.sqrt(mpmath.mpf(2) / 3)
        root = mpmath.sqrt(u)
        derivative = c * mpmath.cosh(c * root) / (2 * u) - mpmath.sinh(c * root) / (2 * u * root)
        term = a_k * mpmath.sqrt(k) * derivative / (mpmath.pi * mpmath.sqrt(2))
        return +term


@dataclass
class RademacherResult:
    n: int
    terms: list[tuple[int, mpmath.mpf]]
    partial_sum: mpmath.mpf
    rounded: int
    digits: int

    @property
    def k_used(self) -> int:
        return len(self.terms)

    @property
    def distance(self) -> mpmath.mpf:
        return abs(self.partial_sum - self.rounded)


def rademacher_p(n: int, k_max: int | None = None, digits: int | None = None) -> RademacherResult:
    """Sum Rademacher terms k = 1..K and round.

    Without ``k_max``, K is the first k >= 5 whose term is below 0.1 in
    absolute value. Raises PrecisionExhausted when the integer part does not
    fit the working precision, or when the distance to the nearest integer
    plus the size of the last term reaches 1/2.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k_max is not None and k_max < 1:
        raise ValueError("k_max must be positive")
    digits = digits or DEFAULT_DIGITS
    terms = []
    with mpmath.workdps(digits):
        total = mpmath.mpf(0)
        k = 0
        while True:
            k += 1
            term = rademacher_term(n, k, digits)
            terms.append((k, term))
            total += term
            if k_max is not None:
                if k >= k_max:
                    break
            elif k >= 5 and abs(term) < mpmath.mpf("0.1"):
                break
        integer_digits = int(mpmath.floor(mpmath.log10(abs(total) + 1))) + 1
        if integer_digits + 5 > digits:
            raise PrecisionExhausted(
                f"p({n}) has about {integer_digits} digits; {digits} working digits are not enough"
            )
        rounded = int(mpmath.nint(total))
        tail = abs(terms[-1][1])
        if abs(total - rounded) + tail >= mpmath.mpf("0.5"):
            raise PrecisionExhausted(
                f"cannot certify rounding of {mpmath.nstr(total, digits)} after {k} terms"
            )
    return RademacherResult(n, terms, total, rounded, digits)


@dataclass(frozen=True)
class CongruenceFamily:
    """Claim p(seed + m*step) == 0 (mod modulus) for m = 0, 1, 2, ..."""

    modulus: int
    seed: int
    step: int
    description: str = ""

    def arguments(self, count: int, limit: int | None = None) -> list[int]:
        args = [self.seed + m * self.step for m in range(count)]
        return [a for a in args if limit is None or a <= limit]


@dataclass
class CongruenceReport:
    family: CongruenceFamily
    residues: list[tuple[int, int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return bool(self.residues) and all(r == 0 for _, r in self.residues)


def scan_congruences(family: CongruenceFamily, count: int, limit: int | None = None) -> CongruenceReport:
    """Residues of p(seed + m*step) mod modulus for m < count (arguments above ``limit`` skipped)."""
    if count < 1:
        raise ValueError("count must be positive")
    report = CongruenceReport(family)
    for arg in family.arguments(count, limit):
        report.residues.append((arg, p_exact(arg) % family.modulus))
    return report


def _listed(modulus: int, *args: int) -> tuple[CongruenceFamily, int]:
    step = args[1] - args[0] if len(args) > 1 else modulus
    fam = CongruenceFamily(modulus, args[0], step, f"p({', '.join(map(str, args))}) = 0 mod {modulus}")
    return fam, len(args)


# Every argument named in the ten classical lists, as (family, how many named).
CLASSICAL_LISTS: list[tuple[CongruenceFamily, int]] = [
    _listed(5, 4, 9, 14, 19),
    _listed(7, 5, 12, 19, 26),
    _listed(11, 6, 17, 28, 39),
    _listed(25, 24, 49, 74, 99),
    _listed(35, 19, 54, 89, 124),
    _listed(49, 47, 96, 145, 194),
    _listed(55, 39, 94, 149),
    _listed(77, 61, 138),
    _listed(121, 116),
    _listed(125, 99),
]

RAMANUJAN_FAMILIES = [
    CongruenceFamily(5, 4, 5, "p(5m+4) = 0 mod 5"),
    CongruenceFamily(7, 5, 7, "p(7m+5) = 0 mod 7"),
    CongruenceFamily(25, 24, 25, "p(25m+24) = 0 mod 25"),
    CongruenceFamily(49, 47, 49, "p(49m+47) = 0 mod 49"),
]

ATKIN_STEPS = (5, 7, 25, 49, 35, 55, 77, 121, 125)


def _exponents(delta: int) -> tuple[int, int, int]:
    exps = []
    for prime in (5, 7, 11):
        e = 0
        while delta % prime == 0:
            delta //= prime
            e += 1
        exps.append(e)
    if delta != 1:
        raise ValueError("step must be of the form 5^a 7^b 11^c")
    return tuple(exps)


def atkin_modulus(delta: int) -> int:
    """5^a 7^floor((b+2)/2) 11^c for delta = 5^a 7^b 11^c.

    The factor of 7 is present only when 7 divides delta: p(4) = 5 already
    rules out reading b = 0 as a claim modulo 7.
    """
    a, b, c = _exponents(delta)
    seven = (b + 2) // 2 if b else 0
    return 5**a * 7**seven * 11**c


def atkin_family(delta: int) -> CongruenceFamily:
    seed = pow(24, -1, delta)
    modulus = atkin_modulus(delta)
    return CongruenceFamily(modulus, seed, delta, f"p({seed}+{delta}m) = 0 mod {modulus}")


def chowla_check() -> CongruenceReport:
    """p(243) mod 7^3; the unmodified prime-power conjecture would demand 0 here."""
    return scan_congruences(CongruenceFamily(343, 243, 343, "p(243) mod 7^3"), 1)
