"""Finite simple group catalog.

Names every nonabelian finite simple group by classification family and
parameters, computes exact factored orders from the standard order
formulas, enumerates all groups up to an order bound, and canonicalizes
the classical exceptional isomorphisms so that order-coincidence
searches are well defined.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd, factorial

from .arith import (
    FactoredNatural,
    factorize,
    is_prime,
    prime_powers_ascending,
    factorial_factored,
)


class Family(enum.Enum):
    ALTERNATING = "A"
    PSL = "PSL"
    PSU = "PSU"
    PSP = "PSp"
    OMEGA = "Omega"          # odd-dimensional orthogonal, odd q
    POMEGA_PLUS = "POmega+"
    POMEGA_MINUS = "POmega-"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    TWISTED_E6 = "2E6"
    E7 = "E7"
    E8 = "E8"
    TRIALITY_D4 = "3D4"
    SUZUKI = "2B2"
    REE_G2 = "2G2"
    REE_F4 = "2F4"
    TITS = "2F4(2)'"
    SPORADIC = "Spor"
    CYCLIC = "C"


# fixed tie-break order for canonical representatives and sorted output
_FAMILY_INDEX = {f: i for i, f in enumerate(Family)}

_CLASSICAL = {Family.PSL, Family.PSU, Family.PSP, Family.OMEGA,
              Family.POMEGA_PLUS, Family.POMEGA_MINUS}
_EXCEPTIONAL = {Family.G2, Family.F4, Family.E6, Family.TWISTED_E6, Family.E7,
                Family.E8, Family.TRIALITY_D4, Family.SUZUKI, Family.REE_G2,
                Family.REE_F4, Family.TITS}
LIE_FAMILIES = _CLASSICAL | _EXCEPTIONAL

# semisimple rank of the ambient algebraic group, for families where it is
# fixed; classical ranks are derived from the subscript
_FIXED_RANK = {Family.G2: 2, Family.F4: 4, Family.E6: 6, Family.TWISTED_E6: 6,
               Family.E7: 7, Family.E8: 8, Family.TRIALITY_D4: 4,
               Family.SUZUKI: 2, Family.REE_G2: 2, Family.REE_F4: 4,
               Family.TITS: 4}

# families whose Steinberg endomorphism has irrational eigenvalue modulus
# sqrt(q); relevant to the order-sandwich check
VERY_TWISTED = {Family.SUZUKI, Family.REE_G2, Family.REE_F4}

TITS_ORDER = 17971200  # 2^11 * 3^3 * 5^2 * 13


@dataclass(frozen=True)
class GroupDescriptor:
    """A finite simple group named by family and parameters.

    ``n`` is the notational subscript for alternating/classical families
    (A_n, PSL_n, PSp_n with n even, Omega_n with n odd, POmega+-_n) and
    the prime itself for CYCLIC; exceptional families carry no subscript.
    ``p`` and ``t`` give the field of definition q = p**t for Lie type.
    """

    family: Family
    n: int = 0
    p: int = 0
    t: int = 0
    sporadic_name: str = ""

    def __post_init__(self) -> None:
        _validate(self)

    @property
    def q(self) -> int:
        return self.p**self.t

    @property
    def is_lie(self) -> bool:
        return self.family in LIE_FAMILIES

    @property
    def rank(self) -> int:
        """Rank of the ambient simple algebraic group."""
        f = self.family
        if f in _FIXED_RANK:
            return _FIXED_RANK[f]
        if f in (Family.PSL, Family.PSU):
            return self.n - 1
        if f is Family.PSP:
            return self.n // 2
        if f is Family.OMEGA:
            return (self.n - 1) // 2
        if f in (Family.POMEGA_PLUS, Family.POMEGA_MINUS):
            return self.n // 2
        raise ValueError(f"{self} has no Lie rank")

    @property
    def name(self) -> str:
        f = self.family
        if f is Family.ALTERNATING:
            return f"A{self.n}"
        if f is Family.SPORADIC:
            return self.sporadic_name
        if f is Family.CYCLIC:
            return f"C{self.n}"
        if f is Family.TITS:
            return "2F4(2)'"
        if f in _CLASSICAL:
            return f"{f.value}{self.n}({self.q})"
        return f"{f.value}({self.q})"

    def __str__(self) -> str:
        return self.name

    def sort_key(self) -> tuple:
        return (_FAMILY_INDEX[self.family], self.n, self.p, self.t,
                self.sporadic_name)


def _require(cond: bool, desc: str) -> None:
    if not cond:
        raise ValueError(f"invalid group parameters: {desc}")


def _validate(g: GroupDescriptor) -> None:
    f = g.family
    if f is Family.ALTERNATING:
        _require(g.n >= 5 and g.p == 0 and g.t == 0, f"A{g.n}")
        return
    if f is Family.CYCLIC:
        _require(is_prime(g.n) and g.p == 0 and g.t == 0, f"C{g.n}")
        return
    if f is Family.SPORADIC:
        _require(g.sporadic_name in sporadic_table(), g.sporadic_name)
        return
    if f is Family.TITS:
        _require(g.n == 0 and g.p == 2 and g.t == 1, "Tits parameters")
        return
    _require(g.t >= 1 and is_prime(g.p), f"field {g.p}^{g.t}")
    q = g.q
    if f is Family.PSL:
        _require(g.n >= 2, "PSL subscript >= 2")
        _require(not (g.n == 2 and q in (2, 3)), f"PSL2({q}) is solvable")
    elif f is Family.PSU:
        _require(g.n >= 3, "PSU subscript >= 3")
        _require(not (g.n == 3 and q == 2), "PSU3(2) is solvable")
    elif f is Family.PSP:
        _require(g.n >= 4 and g.n % 2 == 0, "PSp subscript even, >= 4")
        _require(not (g.n == 4 and q == 2), "PSp4(2) is not simple")
    elif f is Family.OMEGA:
        _require(g.n >= 7 and g.n % 2 == 1, "Omega subscript odd, >= 7")
        _require(q % 2 == 1, "Omega_{2n+1}(q) coincides with PSp for even q")
    elif f in (Family.POMEGA_PLUS, Family.POMEGA_MINUS):
        _require(g.n >= 8 and g.n % 2 == 0, "POmega subscript even, >= 8")
    elif f is Family.G2:
        _require(q >= 3, "G2(2) is not simple")
    elif f is Family.SUZUKI:
        _require(g.p == 2 and g.t >= 3 and g.t % 2 == 1, "2B2 needs q=2^t, t>=3 odd")
    elif f is Family.REE_G2:
        _require(g.p == 3 and g.t >= 3 and g.t % 2 == 1, "2G2 needs q=3^t, t>=3 odd")
    elif f is Family.REE_F4:
        _require(g.p == 2 and g.t >= 3 and g.t % 2 == 1, "2F4 needs q=2^t, t>=3 odd")
    elif f in (Family.F4, Family.E6, Family.TWISTED_E6, Family.E7, Family.E8,
               Family.TRIALITY_D4):
        pass
    else:  # pragma: no cover
        raise AssertionError(f)


# --- order formulas -------------------------------------------------------
#
# Each Lie family order is (1/d) * q^k * product of "pieces", where a piece
# is q^i - 1, q^i + 1, or the 3D4 factor q^8 + q^4 + 1.  Pieces are kept
# symbolic so both the integer order and the cyclotomic index multiset can
# be derived from one table.

def _pieces(g: GroupDescriptor) -> tuple[int, list[tuple[str, int]], int]:
    """(q-exponent k, pieces, divisor d) for a Lie-type descriptor."""
    f, q = g.family, g.q
    n = g.n
    if f is Family.PSL:
        return (n * (n - 1) // 2, [("m", i) for i in range(2, n + 1)],
                gcd(n, q - 1))
    if f is Family.PSU:
        pieces = [("m", i) if i % 2 == 0 else ("p", i) for i in range(2, n + 1)]
        return (n * (n - 1) // 2, pieces, gcd(n, q + 1))
    if f is Family.PSP or f is Family.OMEGA:
        r = n // 2 if f is Family.PSP else (n - 1) // 2
        return (r * r, [("m", 2 * i) for i in range(1, r + 1)], gcd(2, q - 1))
    if f is Family.POMEGA_PLUS:
        r = n // 2
        return (r * (r - 1), [("m", r)] + [("m", 2 * i) for i in range(1, r)],
                gcd(4, q**r - 1))
    if f is Family.POMEGA_MINUS:
        r = n // 2
        return (r * (r - 1), [("p", r)] + [("m", 2 * i) for i in range(1, r)],
                gcd(4, q**r + 1))
    if f is Family.G2:
        return (6, [("m", 6), ("m", 2)], 1)
    if f is Family.F4:
        return (24, [("m", 12), ("m", 8), ("m", 6), ("m", 2)], 1)
    if f is Family.E6:
        return (36, [("m", 12), ("m", 9), ("m", 8), ("m", 6), ("m", 5), ("m", 2)],
                gcd(3, q - 1))
    if f is Family.TWISTED_E6:
        return (36, [("m", 12), ("p", 9), ("m", 8), ("m", 6), ("p", 5), ("m", 2)],
                gcd(3, q + 1))
    if f is Family.E7:
        return (63, [("m", i) for i in (18, 14, 12, 10, 8, 6, 2)], gcd(2, q - 1))
    if f is Family.E8:
        return (120, [("m", i) for i in (30, 24, 20, 18, 14, 12, 8, 2)], 1)
    if f is Family.TRIALITY_D4:
        return (12, [("d4", 0), ("m", 6), ("m", 2)], 1)
    if f is Family.SUZUKI:
        return (2, [("p", 2), ("m", 1)], 1)
    if f is Family.REE_G2:
        return (3, [("p", 3), ("m", 1)], 1)
    if f is Family.REE_F4:
        return (12, [("p", 6), ("m", 4), ("p", 3), ("m", 1)], 1)
    raise ValueError(f"{g} is not of Lie type")


def _piece_value(kind: str, i: int, q: int) -> int:
    if kind == "m":
        return q**i - 1
    if kind == "p":
        return q**i + 1
    if kind == "d4":
        return q**8 + q**4 + 1
    raise AssertionError(kind)


def steinberg_exponent(g: GroupDescriptor) -> int:
    """k with |S|_p = q**k (the Steinberg character degree)."""
    if g.family is Family.TITS:
        return 11  # 2-part of the Tits group order is 2^11
    k, _, _ = _pieces(g)
    return k


def sc_divisor(g: GroupDescriptor) -> int:
    """|Z| of the simply connected cover: sc order = d * |S|."""
    _, _, d = _pieces(g)
    return d


def order_int(g: GroupDescriptor) -> int:
    """Exact order as a plain integer."""
    f = g.family
    if f is Family.ALTERNATING:
        return factorial(g.n) // 2
    if f is Family.CYCLIC:
        return g.n
    if f is Family.SPORADIC:
        return sporadic_table()[g.sporadic_name].order
    if f is Family.TITS:
        return TITS_ORDER
    k, pieces, d = _pieces(g)
    q = g.q
    out = q**k
    for kind, i in pieces:
        out *= _piece_value(kind, i, q)
    assert out % d == 0
    return out // d


@lru_cache(maxsize=None)
def order(g: GroupDescriptor) -> FactoredNatural:
    """Exact order as a factored natural."""
    f = g.family
    if f is Family.ALTERNATING:
        return factorial_factored(g.n).exact_div(FactoredNatural.from_int(2))
    if f is Family.CYCLIC:
        return FactoredNatural.from_int(g.n)
    if f is Family.SPORADIC:
        return sporadic_table()[g.sporadic_name].factored_order
    if f is Family.TITS:
        return FactoredNatural.from_int(TITS_ORDER)
    k, pieces, d = _pieces(g)
    q = g.q
    out = FactoredNatural.from_map({g.p: k * g.t})
    for kind, i in pieces:
        out = out * FactoredNatural.from_int(_piece_value(kind, i, q))
    if d > 1:
        out = out.exact_div(FactoredNatural.from_int(d))
    return out


# --- exceptional isomorphisms ---------------------------------------------

def _d(family: Family, n: int = 0, p: int = 0, t: int = 0,
       spor: str = "") -> GroupDescriptor:
    return GroupDescriptor(family, n, p, t, spor)


@lru_cache(maxsize=1)
def _canonical_map() -> dict[GroupDescriptor, GroupDescriptor]:
    # designated representative: minimal member of the isomorphism class
    # under the family/parameter tie-break
    pairs = [
        (_d(Family.PSL, 2, 2, 2), _d(Family.ALTERNATING, 5)),   # PSL2(4)
        (_d(Family.PSL, 2, 5, 1), _d(Family.ALTERNATING, 5)),   # PSL2(5)
        (_d(Family.PSL, 2, 3, 2), _d(Family.ALTERNATING, 6)),   # PSL2(9)
        (_d(Family.PSL, 4, 2, 1), _d(Family.ALTERNATING, 8)),   # PSL4(2)
        (_d(Family.PSL, 3, 2, 1), _d(Family.PSL, 2, 7, 1)),     # PSL3(2)
        (_d(Family.PSP, 4, 3, 1), _d(Family.PSU, 4, 2, 1)),     # PSp4(3)
    ]
    return dict(pairs)


# display aliases for canonical classes (derived-group names included)
_ALIASES = {
    _d(Family.ALTERNATING, 5): ("PSL2(4)", "PSL2(5)"),
    _d(Family.ALTERNATING, 6): ("PSL2(9)",),
    _d(Family.ALTERNATING, 8): ("PSL4(2)",),
    _d(Family.PSL, 2, 7, 1): ("PSL3(2)",),
    _d(Family.PSU, 4, 2, 1): ("PSp4(3)",),
    _d(Family.PSL, 2, 2, 3): ("2G2(3)'",),
    _d(Family.PSU, 3, 3, 1): ("G2(2)'", "PSU3(9) [order-9-field notation]"),
}


def canonicalize(g: GroupDescriptor) -> GroupDescriptor:
    """Designated representative of g's isomorphism class; idempotent."""
    return _canonical_map().get(g, g)


def class_aliases(g: GroupDescriptor) -> tuple[str, ...]:
    """Alternative names of the isomorphism class of the canonical g."""
    return _ALIASES.get(canonicalize(g), ())


def class_label(g: GroupDescriptor) -> str:
    c = canonicalize(g)
    alias = [a for a in class_aliases(c) if "[" not in a]
    return "~".join([c.name] + alias) if alias else c.name


def lie_realizations(g: GroupDescriptor) -> tuple[GroupDescriptor, ...]:
    """All Lie-type descriptors isomorphic to g (possibly none)."""
    c = canonicalize(g)
    out = [d for d, rep in _canonical_map().items() if rep == c and d.is_lie]
    if c.is_lie:
        out.append(c)
    return tuple(sorted(out, key=GroupDescriptor.sort_key))


# --- sporadic data ---------------------------------------------------------

@dataclass(frozen=True)
class SporadicInfo:
    name: str
    order: int
    factored_order: FactoredNatural
    smallest_missing_prime: int
    has_2_defect_zero: bool
    largest_degree: int | None  # None when not recorded


@lru_cache(maxsize=1)
def sporadic_table() -> dict[str, SporadicInfo]:
    text = (resources.files("simplecod") / "data" / "sporadic.tsv").read_text(
        encoding="utf-8")
    table: dict[str, SporadicInfo] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, order_s, missing_s, defect_s, bdeg_s = line.split("\t")
        n = int(order_s)
        fac = FactoredNatural.from_int(n)
        if max(fac.primes()) > 71:
            raise ValueError(f"sporadic order of {name} is not 71-smooth")
        bdeg = int(bdeg_s)
        info = SporadicInfo(
            name=name,
            order=n,
            factored_order=fac,
            smallest_missing_prime=int(missing_s),
            has_2_defect_zero=bool(int(defect_s)),
            largest_degree=bdeg if bdeg > 0 else None,
        )
        table[name] = info
    if len(table) != 26:
        raise ValueError(f"expected 26 sporadic groups, got {len(table)}")
    return table


# --- enumeration -----------------------------------------------------------

_MIN_SUBSCRIPT = {Family.PSL: 2, Family.PSU: 3, Family.PSP: 4,
                  Family.OMEGA: 7, Family.POMEGA_PLUS: 8,
                  Family.POMEGA_MINUS: 8}
_SUBSCRIPT_STEP = {Family.PSL: 1, Family.PSU: 1, Family.PSP: 2,
                   Family.OMEGA: 2, Family.POMEGA_PLUS: 2,
                   Family.POMEGA_MINUS: 2}


def _field_range(family: Family, max_q: int,
                 characteristic: int | None = None) -> list[tuple[int, int, int]]:
    if family is Family.SUZUKI or family is Family.REE_F4:
        if characteristic not in (None, 2):
            return []
        return [(2**t, 2, t) for t in range(3, max_q.bit_length() + 1, 2)
                if 2**t <= max_q]
    if family is Family.REE_G2:
        if characteristic not in (None, 3):
            return []
        qs = []
        t = 3
        while 3**t <= max_q:
            qs.append((3**t, 3, t))
            t += 2
        return qs
    if characteristic is not None:
        p = characteristic
        if family is Family.OMEGA and p == 2:
            return []
        qs = []
        q, t = p, 1
        while q <= max_q:
            qs.append((q, p, t))
            q *= p
            t += 1
        return qs
    if family is Family.OMEGA:
        return [(q, p, t) for q, p, t in prime_powers_ascending(max_q) if p != 2]
    return list(prime_powers_ascending(max_q))


def _try_descriptor(family: Family, n: int, p: int, t: int) -> GroupDescriptor | None:
    try:
        return GroupDescriptor(family, n, p, t)
    except ValueError:
        return None


def iter_lie_descriptors(max_order: int, *, max_q: int | None = None,
                         max_rank: int | None = None,
                         characteristic: int | None = None,
                         max_t: int | None = None):
    """All valid Lie-type descriptors (pre-canonicalization) within caps.

    A descriptor appears even when its isomorphism class is alternating
    (e.g. PSL4(2)); callers doing isomorphism-level work canonicalize.
    Orders are strictly increasing in q for fixed family and subscript, and
    in the subscript for the minimal valid field, so over-generation with
    these cutoffs is complete.
    """
    # field cap from the smallest Lie order ~ q^3/2 (PSL2)
    q_cap = _icbrt(2 * max_order) + 2
    if max_q is not None:
        q_cap = min(q_cap, max_q)
    for family in sorted(LIE_FAMILIES, key=_FAMILY_INDEX.get):
        if family is Family.TITS:
            if (TITS_ORDER <= max_order and characteristic in (None, 2)
                    and (max_rank is None or max_rank >= 4)):
                yield GroupDescriptor(Family.TITS, 0, 2, 1)
            continue
        fields = _field_range(family, q_cap, characteristic)
        if max_t is not None:
            fields = [f for f in fields if f[2] <= max_t]
        if not fields:
            continue
        if family in _MIN_SUBSCRIPT:
            n = _MIN_SUBSCRIPT[family]
            step = _SUBSCRIPT_STEP[family]
            while True:
                smallest = _min_order_at_subscript(family, n, fields)
                if smallest is None:
                    # parameter exclusions only occur at tiny subscripts;
                    # larger subscripts over the same fields may be valid
                    if n < 8:
                        n += step
                        continue
                    break
                if smallest > max_order:
                    break
                if max_rank is not None and _rank_of(family, n) > max_rank:
                    break
                for q, p, t in fields:
                    g = _try_descriptor(family, n, p, t)
                    if g is None:
                        continue
                    if order_int(g) > max_order:
                        break
                    yield g
                n += step
        else:
            for q, p, t in fields:
                g = _try_descriptor(family, 0, p, t)
                if g is None:
                    continue
                if max_rank is not None and g.rank > max_rank:
                    break
                if order_int(g) > max_order:
                    break
                yield g


def _min_order_at_subscript(family: Family, n: int, fields) -> int | None:
    for q, p, t in fields:
        g = _try_descriptor(family, n, p, t)
        if g is not None:
            return order_int(g)
    return None


def _icbrt(n: int) -> int:
    """Integer cube root (floor)."""
    if n < 0:
        raise ValueError
    x = 1 << (-(-n.bit_length() // 3))
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            return x
        x = y


def _rank_of(family: Family, n: int) -> int:
    if family in _FIXED_RANK:
        return _FIXED_RANK[family]
    if family in (Family.PSL, Family.PSU):
        return n - 1
    if family is Family.OMEGA:
        return (n - 1) // 2
    return n // 2


def enumerate_simple_groups(max_order: int) -> list[tuple[GroupDescriptor, FactoredNatural]]:
    """One canonical descriptor per isomorphism class with order <= max_order.

    Sorted by order, then by the fixed family/parameter tie-break.
    Abelian (cyclic) simple groups are excluded by design.
    """
    if max_order < 60:
        return []
    seen: set[GroupDescriptor] = set()
    out: list[tuple[GroupDescriptor, FactoredNatural]] = []
    m = 5
    while factorial(m) // 2 <= max_order:
        g = GroupDescriptor(Family.ALTERNATING, m)
        seen.add(g)
        out.append((g, order(g)))
        m += 1
    for name, info in sporadic_table().items():
        if info.order <= max_order:
            g = GroupDescriptor(Family.SPORADIC, sporadic_name=name)
            seen.add(g)
            out.append((g, info.factored_order))
    for g in iter_lie_descriptors(max_order):
        c = canonicalize(g)
        if c not in seen:
            seen.add(c)
            out.append((c, order(c)))
    out.sort(key=lambda pair: (pair[1].value, pair[0].sort_key()))
    return out
