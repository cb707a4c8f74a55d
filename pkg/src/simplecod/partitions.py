"""Integer partitions, hook-length degrees, and defect-zero machinery.

Character degrees of the symmetric group S_m are hook-length degrees of
partitions of m; alternating-group degrees follow by the standard
restriction rule (conjugate pairs collapse, self-conjugate partitions
split into two characters of half degree).  A p-defect-zero character of
A_m exists iff some degree has full p-part, which for S_m is governed by
p-core partitions; both the brute-force sweep and the closed forms for
p in {2, 3} are implemented, the brute force being authoritative.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt
from typing import Iterator

from .arith import int_p_part
from .intervals import (
    Interval,
    PRECISIONS,
    certify_le,
    certify_lt,
    exp_interval,
    sqrt_interval,
)

MAX_M = 60  # p(60) < 10^6; covers every desk-scale claim with headroom


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < b for a, b in zip(self.parts, self.parts[1:])) or (
                self.parts and self.parts[-1] < 1):
            raise ValueError(f"not weakly decreasing positive parts: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        width = self.parts[0]
        cols = tuple(sum(1 for p in self.parts if p > j) for j in range(width))
        return Partition(cols)

    def is_self_conjugate(self) -> bool:
        return self.parts == self.conjugate().parts

    def hooks(self) -> list[int]:
        """All hook lengths, row by row."""
        conj = self.conjugate().parts
        out = []
        for i, row in enumerate(self.parts):
            for j in range(row):
                out.append(row - j + conj[j] - i - 1)
        return out


def partitions_of(m: int) -> Iterator[tuple[int, ...]]:
    """All partitions of m in reverse lexicographic order."""
    if m == 0:
        yield ()
        return
    if m > MAX_M:
        raise ValueError(f"partition enumeration capped at m <= {MAX_M}")
    part = [m]
    while True:
        yield tuple(part)
        # find rightmost part > 1 to decrement
        i = len(part) - 1
        ones = 0
        while i >= 0 and part[i] == 1:
            ones += 1
            i -= 1
        if i < 0:
            return
        part[i] -= 1
        rem = ones + 1
        part = part[: i + 1]
        while rem > part[i]:
            part.append(part[i])
            rem -= part[i]
        if rem:
            part.append(rem)


def hook_degree(lam: Partition | tuple[int, ...]) -> int:
    """Degree of the S_m character labeled by lam: m! / (product of hooks)."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    prod = 1
    for h in lam.hooks():
        prod *= h
    num = factorial(lam.size)
    assert num % prod == 0
    return num // prod


@dataclass(frozen=True)
class DegreeProfile:
    """Multiset of irreducible character degrees of A_m (m >= 5)."""

    m: int
    degrees: tuple[int, ...]  # sorted ascending

    @property
    def group_order(self) -> int:
        return factorial(self.m) // 2


@lru_cache(maxsize=None)
def alternating_degrees(m: int) -> DegreeProfile:
    """Degrees of A_m: one per conjugate pair, two halves per self-conjugate."""
    if m < 5:
        raise ValueError("alternating groups are simple only for m >= 5")
    degrees: list[int] = []
    for parts in partitions_of(m):
        lam = Partition(parts)
        conj = lam.conjugate().parts
        if parts == conj:
            d = hook_degree(lam)
            assert d % 2 == 0
            degrees.extend((d // 2, d // 2))
        elif parts > conj:
            degrees.append(hook_degree(lam))
    degrees.sort()
    profile = DegreeProfile(m, tuple(degrees))
    if sum(d * d for d in degrees) != profile.group_order:
        raise AssertionError(f"degree squares of A_{m} do not sum to the order")
    return profile


def b_alternating(m: int) -> int:
    """Largest irreducible character degree of A_m."""
    return alternating_degrees(m).degrees[-1]


def f_alternating(m: int) -> Fraction:
    """Smallest nontrivial codegree of A_m: |A_m| / b(A_m), exact."""
    return Fraction(factorial(m) // 2, b_alternating(m))


# --- p-cores ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _p_core_counts(p: int, limit: int) -> tuple[int, ...]:
    """Number of p-core partitions of each size 0..limit.

    Generating function (Garvan-Kim-Stanton, via the abacus bijection):
    sum_m c_p(m) x^m = prod_{n>=1} (1 - x^{pn})^p / (1 - x^n).
    """
    coeff = [0] * (limit + 1)
    coeff[0] = 1
    # multiply by 1/(1-x^n) for all n
    for n in range(1, limit + 1):
        for i in range(n, limit + 1):
            coeff[i] += coeff[i - n]
    # multiply by (1-x^{pn})^p for all n
    for n in range(1, limit // p + 1):
        for _ in range(p):
            for i in range(limit, p * n - 1, -1):
                coeff[i] -= coeff[i - p * n]
    return tuple(coeff)


def p_core_count(m: int, p: int) -> int:
    limit = max(m, 64)
    return _p_core_counts(p, limit)[m]


def has_p_core(m: int, p: int) -> bool:
    """True iff some partition of m has no hook length divisible by p."""
    return p_core_count(m, p) > 0


def has_p_core_brute(m: int, p: int) -> bool:
    """Hook-scan oracle; only for small m."""
    if m > 30:
        raise ValueError("brute-force oracle capped at m <= 30")
    return any(
        all(h % p for h in Partition(parts).hooks()) for parts in partitions_of(m)
    )


# --- defect zero -----------------------------------------------------------

def alternating_defect_zero(m: int, p: int) -> bool:
    """True iff A_m has an irreducible character of p-defect zero.

    Brute force over the actual degree multiset; authoritative.
    """
    if m < 5:
        raise ValueError("need m >= 5")
    profile = alternating_degrees(m)
    full = int_p_part(profile.group_order, p)
    return any(int_p_part(d, p) == full for d in profile.degrees)


def defect_zero_closed_form(m: int, p: int) -> bool:
    """Closed forms for p = 2 and p = 3.

    p = 2: m = 2k^2 + k or m = 2k^2 + k + 2 for some integer k; k ranges
    over all of Z (negative k gives the companion family 2k^2 - k), which
    is what the brute-force oracle confirms on [5, 45].

    p = 3: no prime l = 2 (mod 3) divides 3m + 1 to an odd exact power.
    This is the *negation* of the condition as printed in the source
    lemma; the printed orientation contradicts its own use (A_10 keeps a
    3-defect-zero character while 31 = 3*10+1 has no such prime l), and
    the brute-force oracle confirms the negated form.
    """
    if p == 2:
        return _is_2k2_k(m) or _is_2k2_k(m - 2)
    if p == 3:
        n = 3 * m + 1
        d = 2
        while d * d <= n:
            if n % d == 0:
                e = 0
                while n % d == 0:
                    n //= d
                    e += 1
                if d % 3 == 2 and e % 2 == 1:
                    return False
            d += 1
        if n > 1 and n % 3 == 2:
            return False
        return True
    raise ValueError("closed forms exist only for p in {2, 3}")


def _is_2k2_k(m: int) -> bool:
    """m = 2k^2 + k for some integer k (either sign)."""
    if m < 0:
        return False
    # 8m + 1 must be an odd square (8(2k^2+k)+1 = (4k+1)^2)
    r = isqrt(8 * m + 1)
    return r * r == 8 * m + 1


# --- largest-degree bounds -------------------------------------------------

_VK_LOWER_C = Fraction(128255, 100000)   # 1.28255
_VK_UPPER_C = Fraction(11565, 100000)    # 0.11565


def _vk_lower(m: int, prec: int) -> Interval:
    half = Interval.point(Fraction(1, 2))
    e = exp_interval(sqrt_interval(m, prec).scale(-_VK_LOWER_C), prec)
    return half * e * sqrt_interval(factorial(m), prec)


def _vk_upper(m: int, prec: int) -> Interval:
    e = exp_interval(sqrt_interval(m, prec).scale(-_VK_UPPER_C), prec)
    return e * sqrt_interval(factorial(m), prec)


def vk_bounds_hold(m: int) -> bool:
    """(1/2) e^{-1.28255 sqrt(m)} sqrt(m!) <= b(A_m) <= e^{-0.11565 sqrt(m)} sqrt(m!).

    Interval-certified; a certification failure raises rather than guessing.
    """
    b = Interval.point(b_alternating(m))
    lower_ok = certify_le(lambda prec: _vk_lower(m, prec), lambda prec: b)
    upper_ok = certify_le(lambda prec: b, lambda prec: _vk_upper(m, prec))
    if lower_ok is None or upper_ok is None:
        raise ArithmeticError(f"VK bound comparison undecided at m={m} "
                              f"even at {PRECISIONS[-1]} bits")
    return lower_ok and upper_ok


def branching_lower_bound_holds(m: int) -> bool:
    """b(A_{m+1}) >= 2(m+1) / (sqrt(8m+1) + 3) * b(A_m), certified."""
    bm1 = Interval.point(b_alternating(m + 1))

    def rhs(prec: int) -> Interval:
        denom = sqrt_interval(8 * m + 1, prec) + Interval.point(3)
        return Interval.point(2 * (m + 1) * b_alternating(m)) / denom

    verdict = certify_le(rhs, lambda prec: bm1)
    if verdict is None:
        raise ArithmeticError(f"branching bound undecided at m={m}")
    return verdict


def restriction_upper_bound_holds(m: int) -> bool:
    """b(A_{m+1}) < (sqrt(8m+9) - 1) * b(A_m), certified."""
    bm1 = Interval.point(b_alternating(m + 1))

    def rhs(prec: int) -> Interval:
        return (sqrt_interval(8 * m + 9, prec) - Interval.point(1)).scale(
            b_alternating(m))

    verdict = certify_lt(lambda prec: bm1, rhs)
    if verdict is None:
        raise ArithmeticError(f"restriction bound undecided at m={m}")
    return verdict
