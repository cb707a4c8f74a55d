"""Outward-rounded rational interval arithmetic.

All real-valued bound formulas in the scans (square roots, logarithms,
exponentials, powers with decimal exponents) are evaluated as intervals
with exact Fraction endpoints.  An inequality is asserted only when the
whole interval lies on one side; otherwise the caller escalates the
working precision and finally reports the comparison as undecided.

Default working precision is 128 bits, escalating to 256 on indecision.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Callable

PRECISIONS = (128, 256)


def _round_down(x: Fraction, prec: int) -> Fraction:
    d = 1 << prec
    return Fraction((x.numerator * d) // x.denominator, d)


def _round_up(x: Fraction, prec: int) -> Fraction:
    d = 1 << prec
    return Fraction(-((-x.numerator * d) // x.denominator), d)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        f = Fraction(x)
        return cls(f, f)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(cands), max(cands))

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor contains zero")
        inv = Interval(1 / other.hi, 1 / other.lo)
        return self * inv

    def scale(self, c) -> "Interval":
        c = Fraction(c)
        if c >= 0:
            return Interval(self.lo * c, self.hi * c)
        return Interval(self.hi * c, self.lo * c)

    def rounded(self, prec: int) -> "Interval":
        return Interval(_round_down(self.lo, prec), _round_up(self.hi, prec))

    # certified comparisons: True/False when decided, None when the
    # intervals overlap and the question cannot be settled at this precision
    def lt(self, other: "Interval") -> bool | None:
        if self.hi < other.lo:
            return True
        if self.lo >= other.hi:
            return False
        return None

    def le(self, other: "Interval") -> bool | None:
        if self.hi <= other.lo:
            return True
        if self.lo > other.hi:
            return False
        return None


def sqrt_interval(x, prec: int = 128) -> Interval:
    """Enclosure of sqrt(x) for a nonnegative int/Fraction/Interval."""
    if isinstance(x, Interval):
        return Interval(sqrt_interval(x.lo, prec).lo, sqrt_interval(x.hi, prec).hi)
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of negative value")
    a, b = x.numerator, x.denominator
    s = 1 << prec
    # floor(sqrt(a*b) * s) / (b*s) <= sqrt(a/b) < (floor + 1) / (b*s)
    root = isqrt(a * b * s * s)
    return Interval(Fraction(root, b * s), Fraction(root + 1, b * s))


@lru_cache(maxsize=None)
def _atanh_enclosure(z: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """atanh(z) for 0 <= z <= 1/2, by the odd power series with tail bound."""
    assert 0 <= z <= Fraction(1, 2)
    if z == 0:
        return (Fraction(0), Fraction(0))
    total = Fraction(0)
    term = z
    k = 0
    tail_target = Fraction(1, 1 << (prec + 8))
    while True:
        total += term / (2 * k + 1)
        k += 1
        term *= z * z
        # remaining tail <= term/(2k+1) * 1/(1 - z^2)
        tail = term / (2 * k + 1) / (1 - z * z)
        if tail < tail_target:
            return (total, total + tail)


@lru_cache(maxsize=None)
def _ln2(prec: int) -> Interval:
    lo, hi = _atanh_enclosure(Fraction(1, 3), prec)
    return Interval(2 * lo, 2 * hi)


def log_interval(x, prec: int = 128) -> Interval:
    """Enclosure of the natural logarithm of a positive value or interval."""
    if isinstance(x, Interval):
        return Interval(log_interval(x.lo, prec).lo, log_interval(x.hi, prec).hi)
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log of nonpositive value")
    k = 0
    while x >= 2:
        x /= 2
        k += 1
    while x < 1:
        x *= 2
        k -= 1
    z = (x - 1) / (x + 1)  # in [0, 1/3]
    lo, hi = _atanh_enclosure(z, prec)
    return (Interval(2 * lo, 2 * hi) + _ln2(prec).scale(k)).rounded(prec + 16)


def _exp_point(x: Fraction, prec: int) -> Interval:
    """Enclosure of exp(x) at a rational point."""
    halvings = 0
    while abs(x) > Fraction(1, 2):
        x /= 2
        halvings += 1
    # Taylor sum with explicit tail: |R_N| <= 2 |x|^{N+1} / (N+1)!
    target = Fraction(1, 1 << (prec + 2 * halvings + 8))
    total = Fraction(1)
    term = Fraction(1)
    k = 0
    while True:
        k += 1
        term *= x / k
        total += term
        tail = 2 * abs(term) * abs(x) / (k + 1)
        if tail < target:
            break
    iv = Interval(total - tail, total + tail)
    for _ in range(halvings):
        lo = max(iv.lo, Fraction(0))
        iv = Interval(lo * lo, iv.hi * iv.hi).rounded(prec + 16)
    return iv


def exp_interval(x, prec: int = 128) -> Interval:
    if isinstance(x, Interval):
        return Interval(_exp_point(x.lo, prec).lo, _exp_point(x.hi, prec).hi)
    return _exp_point(Fraction(x), prec)


def pow_interval(base, exponent, prec: int = 128) -> Interval:
    """Enclosure of base**exponent for positive base and rational exponent."""
    b = base if isinstance(base, Interval) else Interval.point(base)
    if b.lo <= 0:
        raise ValueError("pow_interval needs a positive base")
    return exp_interval(log_interval(b, prec).scale(Fraction(exponent)), prec)


def certify_lt(
    lhs: Callable[[int], Interval],
    rhs: Callable[[int], Interval],
    precisions: tuple[int, ...] = PRECISIONS,
) -> bool | None:
    """Certified strict comparison lhs < rhs with precision escalation."""
    for prec in precisions:
        verdict = lhs(prec).lt(rhs(prec))
        if verdict is not None:
            return verdict
    return None


def certify_le(
    lhs: Callable[[int], Interval],
    rhs: Callable[[int], Interval],
    precisions: tuple[int, ...] = PRECISIONS,
) -> bool | None:
    for prec in precisions:
        verdict = lhs(prec).le(rhs(prec))
        if verdict is not None:
            return verdict
    return None


def upper_integer_bound_for_strict(x: Interval) -> int:
    """Largest integer an integer-valued quantity strictly below x can attain."""
    hi = x.hi
    if hi.denominator == 1:
        return hi.numerator - 1
    return hi.numerator // hi.denominator
