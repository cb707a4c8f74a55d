"""Theorem-verification drivers.

Each scan exhaustively checks one of the desk-scale claims over a
parameter range and produces a deterministic ScanReport: structured rows,
free-form notes for flagged discrepancies, and a verdict that is FAIL on
any certified violation, INCONCLUSIVE(n) when n instances could not be
decided at the working precision or search bound, and PASS otherwise.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt

from .arith import FactoredNatural, int_p_part
from .catalog import (
    Family,
    GroupDescriptor,
    VERY_TWISTED,
    canonicalize,
    class_label,
    enumerate_simple_groups,
    iter_lie_descriptors,
    order,
    order_int,
    sc_divisor,
    sporadic_table,
    steinberg_exponent,
)
from .chartab import load_fixture
from .intervals import (
    Interval,
    PRECISIONS,
    certify_le,
    certify_lt,
    log_interval,
    pow_interval,
    sqrt_interval,
    upper_integer_bound_for_strict,
)
from .invariants import (
    FROZEN_EXCEPTIONS,
    NotGeneric,
    artin_invariants,
    table1_prediction,
)
from . import partitions as parts


@dataclass
class ScanReport:
    scan: str
    params: tuple[tuple[str, str], ...]
    columns: tuple[str, ...]
    rows: list[tuple[str, ...]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    violations: int = 0
    inconclusive: int = 0

    @property
    def verdict(self) -> str:
        if self.violations:
            return "FAIL"
        if self.inconclusive:
            return f"INCONCLUSIVE({self.inconclusive})"
        return "PASS"

    def to_tsv(self) -> str:
        out = [f"# scan\t{self.scan}"]
        out.extend(f"# {k}\t{v}" for k, v in self.params)
        out.extend(f"# note\t{n}" for n in self.notes)
        out.append("\t".join(self.columns))
        out.extend("\t".join(r) for r in self.rows)
        out.append(self.verdict)
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        doc = {
            "scan": self.scan,
            "params": dict(self.params),
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
            "notes": list(self.notes),
            "violations": self.violations,
            "inconclusive": self.inconclusive,
            "verdict": self.verdict,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n" + self.verdict + "\n"

    def render(self, as_json: bool = False) -> str:
        return self.to_json() if as_json else self.to_tsv()


def _pmap(fn, items, threads: int = 1) -> list:
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# --- order coincidences ------------------------------------------------------

def coincidence_classes(max_order: int) -> list[tuple[int, list[GroupDescriptor]]]:
    by_order: dict[int, list[GroupDescriptor]] = {}
    for g, o in enumerate_simple_groups(max_order):
        by_order.setdefault(o.value, []).append(g)
    return sorted(
        (n, gs) for n, gs in by_order.items() if len(gs) >= 2
    )


def _is_theorem_pair(gs: list[GroupDescriptor]) -> bool:
    if len(gs) != 2:
        return False
    names = {g.name for g in gs}
    if names == {"A8", "PSL3(4)"}:
        return True
    fams = {g.family for g in gs}
    if fams == {Family.OMEGA, Family.PSP}:
        om = next(g for g in gs if g.family is Family.OMEGA)
        sp = next(g for g in gs if g.family is Family.PSP)
        return om.q == sp.q and om.n == sp.n + 1 and om.q % 2 == 1 and sp.n >= 6
    return False


def coincidence_search(max_order: int) -> ScanReport:
    """Simple order theorem at desk scale: find all order coincidences."""
    report = ScanReport(
        scan="coincidences",
        params=(("max_order", str(max_order)),),
        columns=("order", "classes"),
    )
    for n, gs in coincidence_classes(max_order):
        report.rows.append((str(n), "|".join(class_label(g) for g in gs)))
        if not _is_theorem_pair(gs):
            report.violations += 1
            report.notes.append(f"unexpected coincidence at order {n}")
    return report


# --- Kimmerle et al. inequality ---------------------------------------------

def kimmerle_failures(o: FactoredNatural) -> list[int]:
    """Primes p with |S| >= (|S|_{p'})^2; empty for genuine simple orders."""
    n = o.value
    return [p for p, _ in o.factors if n >= (n // o.p_part(p).value) ** 2]


def kimmerle_sweep(max_order: int, threads: int = 1) -> ScanReport:
    report = ScanReport(
        scan="kimmerle",
        params=(("max_order", str(max_order)),),
        columns=("group", "order", "failing_primes"),
    )
    groups = enumerate_simple_groups(max_order)
    pairs = 0
    for g, o in groups:
        bad = kimmerle_failures(o)
        pairs += len(o.factors)
        if bad:
            report.violations += 1
            report.rows.append((g.name, str(o.value), ",".join(map(str, bad))))
    report.notes.append(
        f"checked {len(groups)} groups, {pairs} (group, prime) pairs")
    return report


# --- order sandwich (rank inequality) ----------------------------------------

@dataclass(frozen=True)
class SandwichResult:
    group: GroupDescriptor
    sc_lower_ok: bool
    sc_upper_ok: bool
    simple_upper_ok: bool
    simple_lower_ok: bool

    @property
    def ok(self) -> bool:
        return self.sc_lower_ok and self.sc_upper_ok


def order_sandwich_check(g: GroupDescriptor) -> SandwichResult:
    """(q-1)^r |G|_p <= |G|_{p'} <= q^r |G|_p on the simply connected order.

    For the Suzuki and Ree families the Frobenius eigenvalue modulus is
    sqrt(q), not q, and the comparison is interval-certified.
    """
    if not g.is_lie or g.family is Family.TITS:
        raise ValueError(f"{g} is outside the sandwich lemma's scope")
    r = g.rank
    q = g.q
    d = sc_divisor(g)
    p_pow = g.p ** (steinberg_exponent(g) * g.t)
    simple_order = order_int(g)
    sc = d * simple_order
    assert sc % p_pow == 0
    sc_pprime = sc // p_pow
    simple_pprime = simple_order // p_pow

    if g.family in VERY_TWISTED:
        def low(prec: int) -> Interval:
            base = sqrt_interval(q, prec) - Interval.point(1)
            out = Interval.point(p_pow)
            for _ in range(r):
                out = out * base
            return out

        def high(prec: int) -> Interval:
            base = sqrt_interval(q, prec)
            out = Interval.point(p_pow)
            for _ in range(r):
                out = out * base
            return out

        sc_val = Interval.point(sc_pprime)
        s_val = Interval.point(simple_pprime)
        lo_ok = certify_le(low, lambda prec: sc_val)
        hi_ok = certify_le(lambda prec: sc_val, high)
        s_hi_ok = certify_le(lambda prec: s_val, high)
        s_lo_ok = certify_le(low, lambda prec: s_val)
        if None in (lo_ok, hi_ok, s_hi_ok, s_lo_ok):
            raise ArithmeticError(f"sandwich undecided for {g}")
        return SandwichResult(g, lo_ok, hi_ok, s_hi_ok, s_lo_ok)

    low_v = (q - 1) ** r * p_pow
    high_v = q**r * p_pow
    return SandwichResult(
        g,
        low_v <= sc_pprime,
        sc_pprime <= high_v,
        simple_pprime <= high_v,
        low_v <= simple_pprime,
    )


def sandwich_sweep(max_q: int, max_rank: int, max_order: int | None = None,
                   threads: int = 1) -> ScanReport:
    cap = max_order if max_order is not None else 10**400
    report = ScanReport(
        scan="sandwich",
        params=(("max_q", str(max_q)), ("max_rank", str(max_rank))),
        columns=("group", "sc_lower", "sc_upper", "simple_upper", "simple_lower"),
    )
    gs = sorted(
        {g for g in iter_lie_descriptors(cap, max_q=max_q, max_rank=max_rank)
         if g.family is not Family.TITS},
        key=GroupDescriptor.sort_key)
    results = _pmap(order_sandwich_check, gs, threads)
    simple_lower_failures = 0
    for res in results:
        report.rows.append((
            res.group.name,
            _yn(res.sc_lower_ok), _yn(res.sc_upper_ok),
            _yn(res.simple_upper_ok), _yn(res.simple_lower_ok),
        ))
        if not res.ok or not res.simple_upper_ok:
            report.violations += 1
        if not res.simple_lower_ok:
            simple_lower_failures += 1
    report.notes.append(f"checked {len(results)} groups on simply connected orders")
    if simple_lower_failures:
        report.notes.append(
            f"simple-form lower inequality fails for {simple_lower_failures} "
            "groups (expected when the center divisor d > 1; the lemma is "
            "stated for the full fixed-point group)")
    return report


def _yn(b: bool) -> str:
    return "ok" if b else "FAIL"


def _tf(b: bool) -> str:
    return "true" if b else "false"


# --- largest-degree upper bounds ----------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    group: GroupDescriptor
    steinberg: FactoredNatural | None   # |S|_p for Lie type
    b_upper: int
    f_lower: Fraction                   # |S| / b_upper
    f_upper: Fraction                   # |S|_{p'} (Lie) or |S| / VK-lower (A_m)
    bound_family: str

    def __post_init__(self) -> None:
        assert self.f_lower <= self.f_upper


_EXCEPTIONAL_B = {Family.G2, Family.F4, Family.E6, Family.TWISTED_E6, Family.E7,
                  Family.E8, Family.TRIALITY_D4, Family.SUZUKI, Family.REE_G2,
                  Family.REE_F4, Family.TITS}


def b_upper_bound(g: GroupDescriptor) -> BoundReport:
    """Certified upper bound on the largest character degree.

    Exceptional families use the explicit 256/26 multiples of the Steinberg
    degree; classical ones the published polylogarithmic factors; alternating
    groups the Vershik-Kerov envelope.
    """
    n_total = order_int(g)
    if g.family is Family.ALTERNATING:
        m = g.n
        hi = parts._vk_upper(m, 128)
        b_up = upper_integer_bound_for_strict(Interval(hi.hi, hi.hi)) + 1
        lo = parts._vk_lower(m, 128)
        b_low = max(1, int(lo.lo))
        return BoundReport(g, None, b_up, Fraction(n_total, b_up),
                           Fraction(n_total, b_low), "alternating-vk")
    if not g.is_lie:
        raise ValueError(f"no degree bound for {g}")
    st = order(g).p_part(g.p)
    st_v = st.value
    pprime = Fraction(n_total, st_v)
    if g.family in _EXCEPTIONAL_B:
        if g.q == 2:
            b_up, fam = 256 * st_v - 1, "exceptional-q2"
        else:
            b_up, fam = 26 * st_v - 1, "exceptional-q3plus"
        return BoundReport(g, st, b_up, Fraction(n_total, b_up), pprime, fam)

    q = g.q
    if g.family is Family.PSL:
        arg = Fraction(1) if False else None
        def formula(prec: int) -> Interval:
            lg = log_interval(g.n + 1, prec) / log_interval(q, prec)
            base = Interval.point(1) + lg
            return pow_interval(base, Fraction(127, 50), prec).scale(13 * st_v)
        fam = "linear-13log254"
    elif g.family is Family.PSU:
        def formula(prec: int) -> Interval:
            lg = log_interval(g.n + 1, prec) / log_interval(q, prec)
            base = Interval.point(2) + lg
            return pow_interval(base, Fraction(127, 100), prec).scale(2 * st_v)
        fam = "unitary-2log127"
    else:
        r = g.rank
        mult = 38 if q % 2 == 1 else 8
        def formula(prec: int) -> Interval:
            lg = log_interval(2 * r + 1, prec) / log_interval(q, prec)
            base = Interval.point(1) + lg
            return pow_interval(base, Fraction(127, 100), prec).scale(mult * st_v)
        fam = f"classical-{mult}log127"
    b_up = upper_integer_bound_for_strict(formula(128))
    return BoundReport(g, st, b_up, Fraction(n_total, b_up), pprime, fam)


# --- degree separation (odd orthogonal vs symplectic) -------------------------

@dataclass(frozen=True)
class SeparationResult:
    n: int
    q: int
    alpha: int
    spin_min_degree: int
    symplectic_degree: int          # (q^n + alpha)/2
    separation_ok: bool
    witness_small: int              # (q^{2n}-1)/(q^2-1)
    witness_large: int              # q (q^{2n}-1)/(q^2-1)
    threshold_ok: bool | None       # applicable comparison threshold, if any

    @property
    def ok(self) -> bool:
        return self.separation_ok and self.threshold_ok is not False


def separation_check(n: int, q: int) -> SeparationResult:
    """Minimal spin degree exceeds the symplectic witness degree (q^n+a)/2."""
    if n < 3 or q < 3 or q % 2 == 0:
        raise ValueError("need n >= 3 and odd prime power q")
    alpha = 1 if (q**n - 1) % 4 == 0 else -1
    assert (q**n - alpha) % 4 == 0
    sympl = (q**n + alpha) // 2
    if (n, q) == (3, 3):
        spin = 27  # classification of minimal degrees excludes (3,3); known value
    elif q == 3:
        spin = (3**n - 1) * (3**n - 3) // (2 * (3 + 1))
    else:
        spin = (q ** (2 * n) - 1) // (q * q - 1)
    w1 = (q ** (2 * n) - 1) // (q * q - 1)
    w2 = q * w1
    threshold: bool | None = None
    if q > 3:
        threshold = Fraction(w1) < Fraction(q ** (2 * n) - 1, 2 * (q + 1))
    elif n >= 4:
        threshold = Fraction(w2) < Fraction(
            (q ** (2 * n) - 1) * (q ** (n - 1) - q), 2 * (q * q - 1))
    return SeparationResult(n, q, alpha, spin, sympl, spin > sympl, w1, w2,
                            threshold)


def separation_sweep(max_n: int, max_q: int, threads: int = 1) -> ScanReport:
    report = ScanReport(
        scan="separation",
        params=(("max_n", str(max_n)), ("max_q", str(max_q))),
        columns=("n", "q", "alpha", "spin_min_degree", "symplectic_degree",
                 "separated", "threshold"),
    )
    qs = [q for q in range(3, max_q + 1, 2)
          if len(set(FactoredNatural.from_int(q).primes())) == 1]
    grid = [(n, q) for n in range(3, max_n + 1) for q in qs]
    for res in _pmap(lambda nq: separation_check(*nq), grid, threads):
        report.rows.append((
            str(res.n), str(res.q), str(res.alpha), str(res.spin_min_degree),
            str(res.symplectic_degree), _yn(res.separation_ok),
            "n/a" if res.threshold_ok is None else _yn(res.threshold_ok),
        ))
        if not res.ok:
            report.violations += 1
    return report


# --- alternating f-monotonicity ------------------------------------------------

def f_alternating_scan(max_m: int, threads: int = 1) -> ScanReport:
    """Strict growth of f(A_m) plus the branching and Vershik-Kerov bounds."""
    if max_m > parts.MAX_M:
        raise ValueError(f"max_m capped at {parts.MAX_M}")
    report = ScanReport(
        scan="f-scan",
        params=(("max_m", str(max_m)),),
        columns=("m", "b", "f", "f_increasing", "b_ratio_bound",
                 "restriction_bound", "branching_bound", "vk_bounds"),
    )
    for m in range(5, max_m + 1):
        b = parts.b_alternating(m)
        f = parts.f_alternating(m)
        inc = ratio = restr = branch = "n/a"
        if m < max_m:
            inc = _yn(f < parts.f_alternating(m + 1))
            ratio = _yn(parts.b_alternating(m + 1) < (m + 1) * b)
            restr = _yn(parts.restriction_upper_bound_holds(m))
            branch = _yn(parts.branching_lower_bound_holds(m))
            if "FAIL" in (inc, ratio, restr, branch):
                report.violations += 1
        vk = _yn(parts.vk_bounds_hold(m))
        if vk == "FAIL":
            report.violations += 1
        report.rows.append((str(m), str(b), str(f), inc, ratio, restr, branch, vk))
    if max_m >= 19:
        b19 = parts.b_alternating(19)
        report.notes.append(f"b(A_19) = {b19}")
        if b19 != 64664600:
            report.violations += 1
            report.notes.append("b(A_19) differs from the recorded value 64664600")
    return report


# --- mixed alternating / Lie / sporadic scans ----------------------------------

_FIXTURE_BY_CLASS = {
    "A5": "A5", "A6": "A6", "A7": "A7", "A8": "A8", "A9": "A9", "A10": "A10",
    "PSL2(7)": "PSL2_7", "PSL2(8)": "PSL2_8", "PSL2(11)": "PSL2_11",
    "PSL2(13)": "PSL2_13", "PSL3(4)": "PSL3_4", "M11": "M11", "2B2(8)": "Sz8",
}


def exact_f(g: GroupDescriptor) -> Fraction | None:
    """Exact f when the class has alternating structure or a bundled table."""
    c = canonicalize(g)
    if c.family is Family.ALTERNATING and c.n <= parts.MAX_M:
        return parts.f_alternating(c.n)
    fx = _FIXTURE_BY_CLASS.get(c.name)
    if fx is not None:
        table = load_fixture(fx)
        return Fraction(table.order, max(r.degree for r in table.records))
    return None


def _f_interval(g: GroupDescriptor) -> tuple[Fraction, Fraction]:
    """Certified enclosure [f_lower, f_upper] of f(g) for Lie-type g."""
    br = b_upper_bound(g)
    return br.f_lower, br.f_upper


def defect_zero_degrees(m: int, p: int) -> list[int]:
    """Degrees of A_m with full p-part (p-defect zero)."""
    profile = parts.alternating_degrees(m)
    full = int_p_part(profile.group_order, p)
    return sorted(d for d in profile.degrees if int_p_part(d, p) == full)


def pprime_candidate_search(m: int, p: int) -> list[tuple[int, list[str]]]:
    """For each p'-part candidate |A_m|/d (d a p-defect-zero degree of A_m),
    exhaustively list characteristic-p Lie groups S with |S|_{p'} equal to
    the candidate and |S| dividing |A_m|.

    Any S with cod(S) inside cod(A_m) must divide |A_m| and have its
    Steinberg codegree |S|_{p'} among the candidates; |S| < candidate^2 by
    the simple-order inequality |S| < (|S|_{p'})^2, so the search is finite.
    """
    am = factorial(m) // 2
    out = []
    for d in sorted(set(defect_zero_degrees(m, p))):
        cand = am // d
        matches = []
        seen = set()
        for g in iter_lie_descriptors(cand * cand - 1, characteristic=p):
            c = canonicalize(g)
            if c in seen:
                continue
            seen.add(c)
            o = order_int(g)
            if o // int_p_part(o, p) == cand and am % o == 0:
                matches.append(c.name)
        out.append((cand, sorted(matches)))
    return out


def char_p_refutation(m: int, p: int) -> tuple[str, str]:
    """(status, reason) certifying that no characteristic-p Lie group has its
    codegrees inside cod(A_m); status 'open' when nothing applies.

    Chain: containment forces |S| divides |A_m| and f(S) >= f(A_m); also
    f(S) <= |S|_{p'} < |S|_p^2 <= |A_m|_p^2, so f(A_m) >= |A_m|_p^2 refutes.
    The Steinberg codegree |S|_{p'} is coprime to p, so A_m needs a
    p-defect-zero character, and |S|_{p'} must be one of finitely many
    explicit candidates, each settled by exhaustive catalog search.
    """
    am = factorial(m) // 2
    f_am = parts.f_alternating(m)
    ap = int_p_part(am, p)
    if f_am >= ap * ap:
        return ("refuted", f"f(A_{m}) >= |A_{m}|_{p}^2 = {ap * ap}")
    if not parts.alternating_defect_zero(m, p):
        return ("refuted", f"A_{m} has no {p}-defect-zero character")
    searches = pprime_candidate_search(m, p)
    leftover = [(cand, names) for cand, names in searches if names]
    if not leftover:
        cands = ",".join(str(c) for c, _ in searches)
        return ("refuted", f"no catalog match for candidate p'-parts {cands}")
    detail = "; ".join(f"{cand}: {','.join(names)}" for cand, names in leftover)
    return ("open", f"unrefuted candidate matches {detail}")


def mixed_case_scan(max_m: int, max_order: int, threads: int = 1) -> ScanReport:
    """Divisible-growth of f across alternating, Lie, and sporadic groups.

    Sections: (i) |A_m| divides |H| forces f(H) > f(A_m) for Lie H; (ii) Lie
    S with |S| dividing |A_m| is refuted from containment via f or via the
    p-defect-zero p'-part candidates; (iii) sporadic vs alternating in both
    directions.  Undecided instances are itemized, never asserted.
    """
    report = ScanReport(
        scan="mixed-scan",
        params=(("max_m", str(max_m)), ("max_order", str(max_order))),
        columns=("section", "m", "group", "detail", "status"),
    )
    groups = enumerate_simple_groups(max_order)
    lie_groups = [(g, o) for g, o in groups
                  if g.is_lie or _has_lie_realization(g)]

    # (i) Prop 7.1 direction
    for m in range(7, max_m + 1):
        if m == 8:
            continue
        am = factorial(m) // 2
        f_am = parts.f_alternating(m)
        for g, o in lie_groups:
            if o.value % am or (g.family is Family.ALTERNATING and g.n == m):
                continue
            fe = exact_f(g)
            if fe is not None:
                status = "confirmed" if fe > f_am else "VIOLATION"
            else:
                flo, fhi = _f_interval(g)
                if flo > f_am:
                    status = "confirmed"
                elif fhi <= f_am:
                    status = "VIOLATION"
                else:
                    status = "inconclusive"
            if status == "VIOLATION":
                report.violations += 1
            elif status == "inconclusive":
                report.inconclusive += 1
            report.rows.append(("7.1", str(m), class_label(g),
                                f"f(A_{m})={f_am}", status))

    # (ii) Prop 7.3 direction: no Lie S has cod(S) inside cod(A_m)
    from .catalog import lie_realizations
    for m in range(7, max_m + 1):
        if m == 8:
            continue
        am = factorial(m) // 2
        f_am = parts.f_alternating(m)
        char_status: dict[int, tuple[str, str]] = {}
        for p, _ in FactoredNatural.from_int(am).factors:
            char_status[p] = char_p_refutation(m, p)
            status, reason = char_status[p]
            if status == "open":
                report.inconclusive += 1
            report.rows.append(("7.3-char", str(m), f"char {p}", reason,
                                "refuted" if status == "refuted" else "inconclusive"))
        for g, o in lie_groups:
            if am % o.value or (g.family is Family.ALTERNATING and g.n == m):
                continue
            fe = exact_f(g)
            if fe is not None and fe < f_am:
                status = "confirmed-f"
            elif fe is None and _f_interval(g)[1] < f_am:
                status = "confirmed-f"
            else:
                chars = {r.p for r in lie_realizations(g)}
                done = [p for p in chars
                        if char_status.get(p, ("open", ""))[0] == "refuted"]
                if done:
                    status = f"confirmed-defect-char{min(done)}"
                elif fe is not None and fe >= f_am and m >= 44:
                    status = "VIOLATION"
                    report.violations += 1
                else:
                    status = "inconclusive"
                    report.inconclusive += 1
            report.rows.append(("7.3", str(m), class_label(g),
                                f"f(A_{m})={f_am}", status))

    # (iii) sporadic checks
    _sporadic_rows(report)
    report.notes.append(
        "search bound for Lie enumeration; instances beyond it are not claimed")
    return report


def _has_lie_realization(g: GroupDescriptor) -> bool:
    from .catalog import lie_realizations
    return bool(lie_realizations(g))


def _min_alternating_host(order_f: FactoredNatural) -> int:
    """Least m >= 5 with |S| dividing m!/2."""
    from .arith import factorial_factored
    m = max(5, max(order_f.primes()))
    while True:
        target = factorial_factored(m).exact_div(FactoredNatural.from_int(2))
        if order_f.divides(target):
            return m
        m += 1


def _sporadic_rows(report: ScanReport) -> None:
    # sporadic S inside A_m: f(S) must stay below f(A_m) for all admissible m
    shortcut_failures = []
    for name, info in sorted(sporadic_table().items()):
        if info.largest_degree is not None:
            f_upper: Fraction = Fraction(info.order, info.largest_degree)
            f_src = "exact"
        else:
            # any character table has fewer than 250 classes here, so
            # b(S) > sqrt(|S|/250) and f(S) < sqrt(250 |S|)
            f_upper = Fraction(isqrt(250 * info.order) + 1)
            f_src = "class-bound"
        p_s = max(info.factored_order.primes())
        root = sqrt_interval(Fraction(factorial(p_s), 2), 128)
        if not (f_upper < root.lo):
            shortcut_failures.append(name)
        m_min = _min_alternating_host(info.factored_order)
        m = m_min
        status = "confirmed"
        while True:
            tail = sqrt_interval(Fraction(factorial(m), 2), 128)
            if f_upper < tail.lo:
                break  # f(A_k) > sqrt(k!/2) >= this for all k >= m
            if m > parts.MAX_M:
                status = "inconclusive"
                break
            if not (f_upper < parts.f_alternating(m)):
                # the bound route failing is indecision; the exact route
                # failing is a genuine counterexample
                status = "VIOLATION" if f_src == "exact" else "inconclusive"
                break
            m += 1
        if status == "VIOLATION":
            report.violations += 1
        elif status == "inconclusive":
            report.inconclusive += 1
        report.rows.append((
            "8.2-spor-in-alt", str(m_min), name,
            f"f(S) {f_src} bound {f_upper}", status))
    if shortcut_failures:
        report.notes.append(
            "the one-line test f(S) < sqrt(p_S!/2) fails for "
            + ",".join(sorted(shortcut_failures))
            + "; the per-m certification above decides those cases")

    # alternating A_m inside sporadic H: m is capped by the smallest prime
    # missing from |H|, and f(A_m) stays below f(H)
    for name, info in sorted(sporadic_table().items()):
        if info.largest_degree is not None:
            f_lower = Fraction(info.order, info.largest_degree)
            exact = True
        else:
            f_lower = Fraction(isqrt(info.order))  # b < sqrt|H| so f > sqrt|H|
            exact = False
        f_src = "exact" if exact else "sqrt-bound"
        checked = 0
        ok = True
        for m in range(5, info.smallest_missing_prime):
            if info.order % (factorial(m) // 2):
                continue
            checked += 1
            if exact:
                ok = ok and parts.f_alternating(m) < f_lower
            else:
                ok = ok and parts.f_alternating(m) <= f_lower
        status = "confirmed" if ok else ("VIOLATION" if exact else "inconclusive")
        if status == "VIOLATION":
            report.violations += 1
        elif status == "inconclusive":
            report.inconclusive += 1
        report.rows.append((
            "8.2-alt-in-spor", str(checked), name,
            f"f(H) {f_src} lower bound {f_lower}", status))


# --- Artin collision scan -------------------------------------------------------

def artin_collision_scan(max_q: int, max_rank: int, max_order: int,
                         max_t: int | None = None, threads: int = 1,
                         multiset: bool = False) -> ScanReport:
    """Bucket Lie realizations by characteristic and definition-based
    (omega, psi); within a bucket, groups with equal p'-parts of order must
    be the known order-coincidence pairs.  Also reports every definition /
    generic-formula mismatch against the frozen exception list.
    """
    report = ScanReport(
        scan="artin-scan",
        params=(("max_q", str(max_q)), ("max_rank", str(max_rank)),
                ("max_order", str(max_order)), ("max_t", str(max_t or "-"))),
        columns=("kind", "characteristic", "omega", "psi", "groups", "detail"),
    )
    descriptors = sorted(
        {g for g in iter_lie_descriptors(max_order, max_q=max_q,
                                         max_rank=max_rank, max_t=max_t)},
        key=GroupDescriptor.sort_key)
    buckets: dict[tuple[int, int, int], list[GroupDescriptor]] = {}
    mismatches: list[GroupDescriptor] = []
    for g in descriptors:
        inv = artin_invariants(g, multiset=multiset)
        buckets.setdefault((g.p, inv.omega, inv.psi), []).append(g)
        pred = table1_prediction(g)
        if not isinstance(pred, NotGeneric) and (
                (inv.omega, inv.psi) != (pred.omega, pred.psi)):
            mismatches.append(g)
            report.rows.append((
                "table1-mismatch", str(g.p), str(inv.omega), str(inv.psi),
                g.name, f"generic formula predicts ({pred.omega}, {pred.psi})"))
    unexpected = [g for g in mismatches if g not in FROZEN_EXCEPTIONS]
    if unexpected:
        report.violations += len(unexpected)
        report.notes.append(
            "mismatches outside the frozen Zsigmondy exception list: "
            + ",".join(g.name for g in unexpected))
    pair_rows = []
    for (p, om, ps), gs in sorted(buckets.items()):
        classes = sorted({canonicalize(g) for g in gs},
                         key=GroupDescriptor.sort_key)
        if len(classes) < 2:
            continue
        reps = classes
        report.rows.append((
            "bucket", str(p), str(om), str(ps),
            "|".join(class_label(g) for g in reps), ""))
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                a, b = reps[i], reps[j]
                oa, ob = order(a), order(b)
                if oa.p_prime_part(p).value == ob.p_prime_part(p).value:
                    pair = sorted((a, b), key=GroupDescriptor.sort_key)
                    ok = _is_theorem_pair(list(pair))
                    pair_rows.append((
                        "collision", str(p), str(om), str(ps),
                        f"{class_label(a)}|{class_label(b)}",
                        "known-pair" if ok else "UNEXPECTED"))
                    if not ok:
                        report.violations += 1
    report.rows.extend(sorted(pair_rows))
    if any(g.name == "PSL2(8)" for g in descriptors):
        report.notes.append(
            "PSL2(8): definition gives (3, 2) while the generic linear-family "
            "row predicts (6, 3); 2^6 - 1 has no primitive prime divisor and "
            "the printed exclusion list does not mention (2, 2^3)")
    report.notes.append(f"swept {len(descriptors)} Lie realizations")
    return report


# --- defect-zero equivalence scan ------------------------------------------------

def defect_zero_scan(max_m: int, threads: int = 1) -> ScanReport:
    """Brute-force defect-zero existence vs the closed forms, p in {2, 3}."""
    if max_m > parts.MAX_M:
        raise ValueError(f"max_m capped at {parts.MAX_M}")
    report = ScanReport(
        scan="defect-zero",
        params=(("max_m", str(max_m)),),
        columns=("m", "p2_brute", "p2_closed", "p3_brute", "p3_closed", "agree"),
    )
    for m in range(5, max_m + 1):
        b2 = parts.alternating_defect_zero(m, 2)
        c2 = parts.defect_zero_closed_form(m, 2)
        b3 = parts.alternating_defect_zero(m, 3)
        c3 = parts.defect_zero_closed_form(m, 3)
        agree = b2 == c2 and b3 == c3
        if not agree:
            report.violations += 1
        report.rows.append((str(m), _tf(b2), _tf(c2), _tf(b3), _tf(c3),
                            _yn(agree)))
    report.notes.append(
        "p=3 closed form is the NEGATION of the printed lemma: as printed "
        "(existence iff some prime l = 2 mod 3 divides 3m+1 to an odd power) "
        "it contradicts its own application at m = 10, where 3m+1 = 31 and "
        "A_10 does have a 3-defect-zero character of degree 567")
    report.notes.append(
        "p=2 closed form m = 2k^2+k or 2k^2+k+2 needs k to range over all "
        "integers: with k restricted to naturals the brute force disagrees "
        "at m = 6, 8, 15, 17, 28, 30, 45 (triangular numbers T_{2k-1} and "
        "their +2 shifts also carry 2-defect-zero characters)")
    return report
