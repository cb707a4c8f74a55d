"""Character-table summaries and codegree predicates.

Tables carry only (degree, kernel order) per irreducible character plus
the group order; every predicate in scope (prime codegrees, prime-power
codegrees, pseudo-algebra containment, the order-divisibility
certificate) depends on nothing else.  Input is a line-based text format:

    # comment
    group <name>
    order <decimal natural>
    char <degree> <kernelOrder>

with exactly one group/order line, at least one char line, single-space
separators, and a required trailing newline.  Duplicate char lines carry
multiplicity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .arith import FactoredNatural, factorize, int_p_part, is_prime, prime_power_root


class TableError(ValueError):
    """Malformed table input; message names the violated rule."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class CharacterRecord:
    degree: int
    kernel_order: int


@dataclass(frozen=True)
class CharacterTable:
    name: str
    group_order: FactoredNatural
    records: tuple[CharacterRecord, ...]

    @property
    def order(self) -> int:
        return self.group_order.value

    def codegree(self, rec: CharacterRecord) -> int:
        index = self.order // rec.kernel_order
        return index // rec.degree

    def is_simple_shaped(self) -> bool:
        """All nontrivial kernels trivial and >= 2 records."""
        nontrivial = [r for r in self.records if r.degree > 1 or r.kernel_order != self.order]
        return len(self.records) >= 2 and all(r.kernel_order == 1 for r in nontrivial)


@dataclass(frozen=True)
class CodegreeProfile:
    """Sorted (codegree, multiplicity) pairs: the group pseudo-algebra."""

    entries: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def codegrees(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.entries)


def _validate_table(name: str, order_value: int, records: list[CharacterRecord],
                    line_of: dict[int, int]) -> CharacterTable:
    trivial = [r for r in records if r.degree == 1 and r.kernel_order == order_value]
    if len(trivial) != 1:
        raise TableError(
            f"expected exactly one trivial character (degree 1, kernel {order_value}), "
            f"found {len(trivial)}")
    square_sum = sum(r.degree * r.degree for r in records)
    if square_sum != order_value:
        raise TableError(
            f"sum-of-squares mismatch: degrees give {square_sum}, order is {order_value}")
    for idx, r in enumerate(records):
        if order_value % r.kernel_order != 0:
            raise TableError(f"kernel order {r.kernel_order} does not divide "
                             f"the group order", line_of.get(idx))
        index = order_value // r.kernel_order
        if index % r.degree != 0:
            raise TableError(f"non-integral codegree: degree {r.degree} does not "
                             f"divide the index {index}", line_of.get(idx))
    return CharacterTable(name, FactoredNatural.from_int(order_value), tuple(records))


def parse_table(text: str) -> CharacterTable:
    if not text.endswith("\n"):
        raise TableError("missing trailing newline")
    name: str | None = None
    order_value: int | None = None
    records: list[CharacterRecord] = []
    line_of: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw or raw.startswith("#"):
            continue
        fields = raw.split(" ")
        if fields[0] == "group":
            if name is not None:
                raise TableError("duplicate group line", lineno)
            if len(fields) != 2 or not fields[1]:
                raise TableError("group line needs exactly one name", lineno)
            name = fields[1]
        elif fields[0] == "order":
            if order_value is not None:
                raise TableError("duplicate order line", lineno)
            order_value = _natural(fields, 2, lineno)[0]
        elif fields[0] == "char":
            degree, kernel = _natural(fields, 3, lineno)
            if degree < 1 or kernel < 1:
                raise TableError("degree and kernel order must be positive", lineno)
            line_of[len(records)] = lineno
            records.append(CharacterRecord(degree, kernel))
        else:
            raise TableError(f"unknown directive {fields[0]!r}", lineno)
    if name is None:
        raise TableError("missing group line")
    if order_value is None:
        raise TableError("missing order line")
    if not records:
        raise TableError("no char lines")
    return _validate_table(name, order_value, records, line_of)


def _natural(fields: list[str], expect: int, lineno: int) -> tuple[int, ...]:
    if len(fields) != expect:
        raise TableError(f"expected {expect - 1} field(s) after {fields[0]!r}", lineno)
    try:
        values = tuple(int(f) for f in fields[1:])
    except ValueError:
        raise TableError(f"non-numeric field in {fields!r}", lineno) from None
    if any(v < 1 for v in values):
        raise TableError("expected positive decimal naturals", lineno)
    return values


def load_table(path: str | Path) -> CharacterTable:
    return parse_table(Path(path).read_text(encoding="utf-8"))


def codegree_profile(table: CharacterTable) -> CodegreeProfile:
    counts: dict[int, int] = {}
    for rec in table.records:
        c = table.codegree(rec)
        counts[c] = counts.get(c, 0) + 1
    return CodegreeProfile(tuple(sorted(counts.items())))


def is_perfect_by_codegrees(table: CharacterTable) -> bool:
    """Perfect groups are exactly the groups with no prime codegree."""
    return not any(is_prime(c) for c in codegree_profile(table).codegrees())


def has_prime_power_codegree(table: CharacterTable) -> bool:
    """Some codegree > 1 is r**a for a prime r."""
    return any(
        c > 1 and prime_power_root(c) is not None
        for c in codegree_profile(table).codegrees()
    )


def smallest_nontrivial_codegree(table: CharacterTable) -> int:
    cods = [c for c in codegree_profile(table).codegrees() if c > 1]
    if not cods:
        raise ValueError(f"{table.name} has no nontrivial codegree")
    return min(cods)


def cod_subset(s: CodegreeProfile, h: CodegreeProfile,
               count_multiplicity: bool = False) -> bool:
    """cod(S) subset of cod(H); with multiplicities, m_S(c) <= m_H(c)."""
    hm = h.as_dict()
    for c, m in s.entries:
        if c not in hm:
            return False
        if count_multiplicity and m > hm[c]:
            return False
    return True


@dataclass(frozen=True)
class DivisibilityCertificate:
    """Witness data for the order-divisibility theorem on a pair of tables.

    For simple S with cod(S) contained in cod(G), matching each nontrivial
    codegree c = |S|/d of S with characters of G of the same codegree forces
    sum m_i d_i^2 / |S|^2 = (|S|-1)/|S|^2 exactly, hence |S| divides |G|.
    """

    ok: bool
    reason: str
    s_name: str = ""
    g_name: str = ""
    identity_value: Fraction | None = None
    divides: bool = False
    quotient: int | None = None
    witnesses: tuple[tuple[int, int, int], ...] = ()  # (codegree, m_S, m_G)


def divisibility_certificate(s: CharacterTable, g: CharacterTable) -> DivisibilityCertificate:
    if not s.is_simple_shaped():
        return DivisibilityCertificate(
            False, f"{s.name}: not a simple-group table (nontrivial kernels present)")
    ps, pg = codegree_profile(s), codegree_profile(g)
    gm = pg.as_dict()
    witnesses = []
    for c, m in ps.entries:
        if c == 1:
            continue
        if c not in gm:
            return DivisibilityCertificate(
                False, f"hypothesis fails: codegree {c} of {s.name} missing from "
                       f"{g.name}", s.name, g.name)
        witnesses.append((c, m, gm[c]))
    # the exact identity sum m_i d_i^2 / |S|^2 = (|S|-1)/|S|^2
    lhs = Fraction(0)
    for rec in s.records:
        c = s.codegree(rec)
        if c == 1:
            continue
        lhs += Fraction(rec.degree * rec.degree, s.order * s.order)
    rhs = Fraction(s.order - 1, s.order * s.order)
    if lhs != rhs:
        return DivisibilityCertificate(
            False, f"identity failure: {lhs} != {rhs}", s.name, g.name)
    divides = g.order % s.order == 0
    if not divides:
        return DivisibilityCertificate(
            False, f"|S| = {s.order} does not divide |G| = {g.order}",
            s.name, g.name, identity_value=lhs)
    return DivisibilityCertificate(
        True, "certified", s.name, g.name, identity_value=lhs,
        divides=True, quotient=g.order // s.order, witnesses=tuple(witnesses))


# --- bundled fixture corpus --------------------------------------------------

def fixture_names() -> tuple[str, ...]:
    root = resources.files("simplecod") / "fixtures"
    return tuple(sorted(
        p.name[:-4] for p in root.iterdir() if p.name.endswith(".tbl")))


@lru_cache(maxsize=None)
def load_fixture(name: str) -> CharacterTable:
    text = (resources.files("simplecod") / "fixtures" / f"{name}.tbl").read_text(
        encoding="utf-8")
    return parse_table(text)


# fixture name -> classification used by tests and scans
SIMPLE_FIXTURES = (
    "A5", "A6", "A7", "A8", "A9", "A10",
    "PSL2_4", "PSL2_5", "PSL2_7", "PSL2_8", "PSL2_9", "PSL2_11", "PSL2_13",
    "PSL3_4", "PSL4_2", "M11", "Sz8",
)
ABELIAN_FIXTURES = ("C2", "C3", "C5", "C6", "C7")
NONPERFECT_FIXTURES = ABELIAN_FIXTURES + ("S3", "A4", "F20")
SYNTHETIC_FIXTURES = ("A5xC2",)
