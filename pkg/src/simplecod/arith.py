"""Exact integer arithmetic: factored naturals, primes, multiplicative orders.

Every quantity that matters downstream (group orders, p-parts, codegrees)
is an exact integer; this module keeps them in factored form so that
p-part extraction and divisibility questions are trivial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import sympy


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a sorted tuple of (prime, exponent)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    if n == 1:
        return ()
    return tuple(sorted((int(p), int(e)) for p, e in sympy.factorint(n).items()))


def prime_power_root(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k if n > 1 is a prime power, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) == 1:
        return fac[0]
    return None


@dataclass(frozen=True)
class FactoredNatural:
    """A positive integer stored as a prime -> exponent map.

    The empty factorization is 1.  All arithmetic is exact; division
    raises if the quotient would not be integral.
    """

    factors: tuple[tuple[int, int], ...] = ()
    _value: int = field(default=0, repr=False, compare=False)

    def __post_init__(self) -> None:
        seen = set()
        for p, e in self.factors:
            if e < 1 or p in seen or not is_prime(p):
                raise ValueError(f"bad factorization entry ({p}, {e})")
            seen.add(p)
        if tuple(sorted(self.factors)) != self.factors:
            raise ValueError("factors must be sorted by prime")
        v = 1
        for p, e in self.factors:
            v *= p**e
        object.__setattr__(self, "_value", v)

    @classmethod
    def from_int(cls, n: int) -> "FactoredNatural":
        return cls(factorize(n))

    @classmethod
    def from_map(cls, factors: dict[int, int]) -> "FactoredNatural":
        return cls(tuple(sorted((p, e) for p, e in factors.items() if e)))

    def __int__(self) -> int:
        return self._value

    @property
    def value(self) -> int:
        return self._value

    def as_map(self) -> dict[int, int]:
        return dict(self.factors)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def __mul__(self, other: "FactoredNatural") -> "FactoredNatural":
        out = dict(self.factors)
        for p, e in other.factors:
            out[p] = out.get(p, 0) + e
        return FactoredNatural.from_map(out)

    def exact_div(self, other: "FactoredNatural") -> "FactoredNatural":
        out = dict(self.factors)
        for p, e in other.factors:
            have = out.get(p, 0)
            if have < e:
                raise ValueError(f"{self.value} not divisible by {other.value}")
            out[p] = have - e
        return FactoredNatural.from_map(out)

    def p_part(self, p: int) -> "FactoredNatural":
        e = self.exponent(p)
        return FactoredNatural(((p, e),) if e else ())

    def p_prime_part(self, p: int) -> "FactoredNatural":
        return FactoredNatural.from_map(
            {r: e for r, e in self.factors if r != p}
        )

    def divides(self, other: "FactoredNatural") -> bool:
        om = dict(other.factors)
        return all(om.get(p, 0) >= e for p, e in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


ONE = FactoredNatural()


def p_part(n: FactoredNatural, p: int) -> FactoredNatural:
    """Maximal power of p dividing n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return n.p_part(p)


def p_prime_part(n: FactoredNatural, p: int) -> FactoredNatural:
    """Maximal divisor of n coprime to p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return n.p_prime_part(p)


def int_p_part(n: int, p: int) -> int:
    """p-part of a plain integer, without full factorization."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def mult_order(p: int, r: int) -> int:
    """Least e >= 1 with p**e == 1 (mod r), for a prime r not dividing p."""
    if not is_prime(r):
        raise ValueError(f"modulus {r} must be prime")
    if p % r == 0:
        raise ValueError(f"{r} divides {p}")
    e = r - 1
    for f, _ in factorize(r - 1):
        while e % f == 0 and pow(p, e // f, r) == 1:
            e //= f
    return e


def factorial_factored(m: int) -> FactoredNatural:
    """m! in factored form via Legendre's formula."""
    out: dict[int, int] = {}
    for p in sympy.primerange(2, m + 1):
        e, q = 0, p
        while q <= m:
            e += m // q
            q *= p
        out[int(p)] = e
    return FactoredNatural.from_map(out)


def prime_powers_ascending(limit: int) -> Iterator[tuple[int, int, int]]:
    """All prime powers q = p**t <= limit as (q, p, t), ascending in q."""
    qs = []
    for p in sympy.primerange(2, limit + 1):
        q, t = int(p), 1
        while q <= limit:
            qs.append((q, int(p), t))
            q *= p
            t += 1
    return iter(sorted(qs))
