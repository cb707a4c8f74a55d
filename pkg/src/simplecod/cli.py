"""Command-line front end.

One subcommand per verification claim; deterministic output.  Exit codes:
0 for PASS or a successful query, 1 for FAIL, 2 for usage or parse errors,
3 for INCONCLUSIVE.
"""
from __future__ import annotations

import argparse
import sys

from .arith import FactoredNatural, is_prime
from .catalog import (
    Family,
    GroupDescriptor,
    canonicalize,
    class_aliases,
    enumerate_simple_groups,
    order,
    sporadic_table,
)
from .chartab import (
    TableError,
    cod_subset,
    codegree_profile,
    divisibility_certificate,
    load_table,
    smallest_nontrivial_codegree,
)
from .invariants import (
    NotCyclotomic,
    NotGeneric,
    artin_invariants,
    cyclotomic_eval,
    cyclotomic_factorization,
    table1_prediction,
)
from .partitions import (
    alternating_defect_zero,
    defect_zero_closed_form,
    has_p_core,
)
from . import scans

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_FAMILY_TOKENS = {
    "A": Family.ALTERNATING, "PSL": Family.PSL, "PSU": Family.PSU,
    "PSP": Family.PSP, "OMEGA": Family.OMEGA, "POMEGA+": Family.POMEGA_PLUS,
    "POMEGA-": Family.POMEGA_MINUS, "G2": Family.G2, "F4": Family.F4,
    "E6": Family.E6, "2E6": Family.TWISTED_E6, "E7": Family.E7,
    "E8": Family.E8, "3D4": Family.TRIALITY_D4, "2B2": Family.SUZUKI,
    "SZ": Family.SUZUKI, "2G2": Family.REE_G2, "2F4": Family.REE_F4,
    "TITS": Family.TITS, "SPOR": Family.SPORADIC, "C": Family.CYCLIC,
}
_SUBSCRIPT_FAMILIES = {Family.PSL, Family.PSU, Family.PSP, Family.OMEGA,
                       Family.POMEGA_PLUS, Family.POMEGA_MINUS}


class UsageError(ValueError):
    pass


def _field(q: int) -> tuple[int, int]:
    fac = FactoredNatural.from_int(q).factors
    if len(fac) != 1:
        raise UsageError(f"{q} is not a prime power")
    return fac[0]


def parse_group(tokens: list[str]) -> GroupDescriptor:
    """Group syntax: A <m> | C <p> | SPOR <name> | TITS |
    <classical family> <subscript> <q> | <exceptional family> <q>."""
    if not tokens:
        raise UsageError("missing group")
    tok = tokens[0].upper()
    fam = _FAMILY_TOKENS.get(tok)
    if fam is None:
        raise UsageError(f"unknown family {tokens[0]!r}")
    try:
        if fam is Family.ALTERNATING or fam is Family.CYCLIC:
            if len(tokens) != 2:
                raise UsageError(f"{tok} takes one parameter")
            return GroupDescriptor(fam, int(tokens[1]))
        if fam is Family.SPORADIC:
            if len(tokens) != 2:
                raise UsageError("SPOR takes a name")
            return GroupDescriptor(fam, sporadic_name=tokens[1])
        if fam is Family.TITS:
            if len(tokens) != 1:
                raise UsageError("TITS takes no parameters")
            return GroupDescriptor(fam, 0, 2, 1)
        if fam in _SUBSCRIPT_FAMILIES:
            if len(tokens) != 3:
                raise UsageError(f"{tok} takes <subscript> <q>")
            n, q = int(tokens[1]), int(tokens[2])
            p, t = _field(q)
            return GroupDescriptor(fam, n, p, t)
        if len(tokens) != 2:
            raise UsageError(f"{tok} takes <q>")
        p, t = _field(int(tokens[1]))
        return GroupDescriptor(fam, 0, p, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="simplecod",
        description="Desk-scale verification of codegree and order "
                    "invariants of finite simple groups")
    ap.add_argument("--json", action="store_true",
                    help="structured output instead of TSV")
    ap.add_argument("--threads", type=int, default=1,
                    help="worker parallelism cap (results are identical)")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("order", help="exact group order")
    g.add_argument("group", nargs="+")
    g.add_argument("--factored", action="store_true")

    g = sub.add_parser("enumerate", help="all simple groups up to a bound")
    g.add_argument("--max-order", type=int, required=True)

    g = sub.add_parser("coincidences", help="order-coincidence classes")
    g.add_argument("--max-order", type=int, required=True)

    g = sub.add_parser("kimmerle", help="|S| < (|S|_{p'})^2 sweep")
    g.add_argument("--max-order", type=int, required=True)

    g = sub.add_parser("sandwich", help="(q-1)^r |G|_p <= |G|_{p'} <= q^r |G|_p")
    g.add_argument("--max-q", type=int, default=9)
    g.add_argument("--max-rank", type=int, default=8)

    g = sub.add_parser("artin", help="Artin invariants of one group")
    g.add_argument("group", nargs="+")
    g.add_argument("--psi-multiset", action="store_true")

    g = sub.add_parser("artin-scan", help="collision scan + generic-table check")
    g.add_argument("--max-q", type=int, default=9)
    g.add_argument("--max-rank", type=int, default=8)
    g.add_argument("--max-order", type=int, default=10**14)
    g.add_argument("--max-t", type=int, default=4)
    g.add_argument("--psi-multiset", action="store_true")

    g = sub.add_parser("cyclo", help="cyclotomic value or order factorization")
    g.add_argument("args", nargs="+",
                   help="<i> <q> for a value, or a group for its factorization")

    g = sub.add_parser("codegrees", help="codegree profile of a table file")
    g.add_argument("--table", required=True)
    g.add_argument("--pseudo", action="store_true",
                   help="print multiplicities (the group pseudo-algebra)")

    g = sub.add_parser("compare", help="codegree-set containment of two tables")
    g.add_argument("--sub", required=True, metavar="TABLE")
    g.add_argument("--super", dest="sup", required=True, metavar="TABLE")
    g.add_argument("--multiplicity", action="store_true")

    g = sub.add_parser("certify-divides",
                       help="order-divisibility certificate for table pair")
    g.add_argument("--simple", required=True, metavar="TABLE")
    g.add_argument("--group", required=True, metavar="TABLE")

    g = sub.add_parser("bounds", help="largest-degree bound report")
    g.add_argument("group", nargs="+")

    g = sub.add_parser("defect-zero",
                       help="defect-zero existence: query or equivalence scan")
    g.add_argument("args", nargs="*", help="<m> <p> for a single query")
    g.add_argument("--max-m", type=int)

    g = sub.add_parser("pcore", help="does some partition of m have no "
                                     "hook divisible by p?")
    g.add_argument("m", type=int)
    g.add_argument("p", type=int)

    g = sub.add_parser("f-scan", help="f(A_m) monotonicity and degree bounds")
    g.add_argument("--max-m", type=int, default=45)

    g = sub.add_parser("mixed-scan", help="alternating / Lie / sporadic f-scan")
    g.add_argument("--max-m", type=int, default=18)
    g.add_argument("--max-order", type=int, default=10**12)

    g = sub.add_parser("separation", help="spin vs symplectic degree separation")
    g.add_argument("--max-n", type=int, default=10)
    g.add_argument("--max-q", type=int, default=13)
    return ap


def _report_exit(report: scans.ScanReport, as_json: bool) -> int:
    sys.stdout.write(report.render(as_json))
    verdict = report.verdict
    if verdict == "PASS":
        return EXIT_OK
    if verdict == "FAIL":
        return EXIT_FAIL
    return EXIT_INCONCLUSIVE


def run(argv: list[str]) -> int:
    ap = _build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _dispatch(ns)
    except (UsageError, TableError, NotCyclotomic, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def _dispatch(ns: argparse.Namespace) -> int:
    out = sys.stdout
    if ns.command == "order":
        g = parse_group(ns.group)
        o = order(g)
        out.write(f"{o}\n" if ns.factored else f"{o.value}\n")
        return EXIT_OK

    if ns.command == "enumerate":
        for g, o in enumerate_simple_groups(ns.max_order):
            aliases = class_aliases(g)
            alias_s = ",".join(a for a in aliases if "[" not in a)
            out.write(f"{g.name}\t{o.value}\t{alias_s}\n")
        return EXIT_OK

    if ns.command == "coincidences":
        return _report_exit(scans.coincidence_search(ns.max_order), ns.json)

    if ns.command == "kimmerle":
        return _report_exit(scans.kimmerle_sweep(ns.max_order, ns.threads), ns.json)

    if ns.command == "sandwich":
        return _report_exit(
            scans.sandwich_sweep(ns.max_q, ns.max_rank, threads=ns.threads),
            ns.json)

    if ns.command == "artin":
        g = parse_group(ns.group)
        inv = artin_invariants(g, multiset=ns.psi_multiset)
        pred = table1_prediction(g)
        if isinstance(pred, NotGeneric):
            pred_s, match = f"not-generic ({pred.reason})", "n/a"
        else:
            pred_s = f"({pred.omega}, {pred.psi})"
            match = "yes" if (inv.omega, inv.psi) == (pred.omega, pred.psi) else "NO"
        flag = " degenerate" if inv.degenerate else ""
        out.write(f"omega\t{inv.omega}\npsi\t{inv.psi}{flag}\n"
                  f"table1\t{pred_s}\nmatch\t{match}\n")
        return EXIT_OK

    if ns.command == "artin-scan":
        return _report_exit(
            scans.artin_collision_scan(ns.max_q, ns.max_rank, ns.max_order,
                                       max_t=ns.max_t, threads=ns.threads,
                                       multiset=ns.psi_multiset),
            ns.json)

    if ns.command == "cyclo":
        if len(ns.args) == 2 and all(a.isdigit() for a in ns.args):
            i, q = int(ns.args[0]), int(ns.args[1])
            out.write(f"{cyclotomic_eval(i, q)}\n")
            return EXIT_OK
        g = parse_group(ns.args)
        fac = cyclotomic_factorization(g)
        q_s = " ".join(f"Phi_{i}^{e}" if e > 1 else f"Phi_{i}"
                       for i, e in fac.q_factors)
        p_s = " ".join(f"Phi_{j}^{f}" if f > 1 else f"Phi_{j}"
                       for j, f in fac.p_factors)
        out.write(f"group\t{g.name}\ndivisor\t{fac.divisor}\n"
                  f"q-form\t(1/{fac.divisor}) * {g.q}^{fac.p_exponent} * {q_s}\n"
                  f"p-form\t(1/{fac.divisor}) * {g.p}^{fac.p_exponent * g.t} * {p_s}\n"
                  f"order\t{fac.q_form_value()}\n")
        return EXIT_OK

    if ns.command == "codegrees":
        table = load_table(ns.table)
        profile = codegree_profile(table)
        for c, mult in profile.entries:
            out.write(f"{c}\t{mult}\n" if ns.pseudo else f"{c}\n")
        return EXIT_OK

    if ns.command == "compare":
        a = codegree_profile(load_table(ns.sub))
        b = codegree_profile(load_table(ns.sup))
        out.write(f"{'true' if cod_subset(a, b, ns.multiplicity) else 'false'}\n")
        return EXIT_OK

    if ns.command == "certify-divides":
        cert = divisibility_certificate(load_table(ns.simple),
                                        load_table(ns.group))
        out.write(f"ok\t{'yes' if cert.ok else 'no'}\nreason\t{cert.reason}\n")
        if cert.identity_value is not None:
            out.write(f"identity\t{cert.identity_value}\n")
        if cert.ok:
            out.write(f"quotient\t{cert.quotient}\n")
            for c, ms, mg in cert.witnesses:
                out.write(f"witness\t{c}\t{ms}\t{mg}\n")
        out.write("PASS\n" if cert.ok else "FAIL\n")
        return EXIT_OK if cert.ok else EXIT_FAIL

    if ns.command == "bounds":
        g = parse_group(ns.group)
        br = scans.b_upper_bound(g)
        st = "-" if br.steinberg is None else str(br.steinberg.value)
        out.write(f"group\t{g.name}\nsteinberg\t{st}\nb_upper\t{br.b_upper}\n"
                  f"f_lower\t{br.f_lower}\nf_upper\t{br.f_upper}\n"
                  f"bound\t{br.bound_family}\n")
        return EXIT_OK

    if ns.command == "defect-zero":
        if ns.max_m is not None:
            return _report_exit(scans.defect_zero_scan(ns.max_m, ns.threads),
                                ns.json)
        if len(ns.args) != 2:
            raise UsageError("defect-zero needs <m> <p> or --max-m")
        m, p = int(ns.args[0]), int(ns.args[1])
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        out.write(f"{'true' if alternating_defect_zero(m, p) else 'false'}\n")
        if p in (2, 3):
            out.write(f"closed-form\t"
                      f"{'true' if defect_zero_closed_form(m, p) else 'false'}\n")
        return EXIT_OK

    if ns.command == "pcore":
        if not is_prime(ns.p):
            raise UsageError(f"{ns.p} is not prime")
        out.write(f"{'true' if has_p_core(ns.m, ns.p) else 'false'}\n")
        return EXIT_OK

    if ns.command == "f-scan":
        return _report_exit(scans.f_alternating_scan(ns.max_m, ns.threads),
                            ns.json)

    if ns.command == "mixed-scan":
        return _report_exit(
            scans.mixed_case_scan(ns.max_m, ns.max_order, ns.threads), ns.json)

    if ns.command == "separation":
        return _report_exit(
            scans.separation_sweep(ns.max_n, ns.max_q, ns.threads), ns.json)

    raise UsageError(f"unknown command {ns.command!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
