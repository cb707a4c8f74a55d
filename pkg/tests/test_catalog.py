from pathlib import Path

import pytest

from simplecod.arith import FactoredNatural
from simplecod.catalog import (
    Family,
    GroupDescriptor,
    canonicalize,
    class_aliases,
    enumerate_simple_groups,
    iter_lie_descriptors,
    order,
    order_int,
    sc_divisor,
    sporadic_table,
    steinberg_exponent,
)

DATA = Path(__file__).parent / "data"


def D(fam, n=0, p=0, t=0, spor=""):
    return GroupDescriptor(fam, n, p, t, spor)


def _pp(q):
    [(p, t)] = FactoredNatural.from_int(q).factors
    return p, t


# orders published in standard references, beyond the 10^6 table
KNOWN_ORDERS = {
    ("A", 10): 1814400,
    ("A", 11): 19958400,
    ("A", 12): 239500800,
    ("A", 13): 3113510400,
    ("PSL", 2, 128): 2097024,                   # 128*127*129
    ("PSL", 3, 8): 16482816,
    ("PSL", 3, 9): 42456960,
    ("PSL", 4, 3): 6065280,
    ("PSL", 5, 2): 9999360,
    ("PSL", 6, 2): 20158709760,
    ("PSU", 3, 7): 5663616,
    ("PSU", 3, 8): 5515776,
    ("PSU", 3, 9): 42573600,
    ("PSU", 4, 3): 3265920,
    ("PSU", 5, 2): 13685760,
    ("PSU", 6, 2): 9196830720,
    ("PSP", 4, 5): 4680000,
    ("PSP", 4, 7): 138297600,
    ("PSP", 6, 2): 1451520,
    ("PSP", 6, 3): 4585351680,
    ("PSP", 8, 2): 47377612800,
    ("OMEGA", 7, 3): 4585351680,
    ("POMEGA+", 8, 2): 174182400,
    ("POMEGA-", 8, 2): 197406720,
    ("G2", 3): 4245696,
    ("G2", 4): 251596800,
    ("G2", 5): 5859000000,
    ("3D4", 2): 211341312,
    ("F4", 2): 3311126603366400,
    ("2B2", 8): 29120,
    ("2B2", 32): 32537600,
    ("2G2", 27): 10073444472,
    ("TITS",): 17971200,
}

_FAM = {"A": Family.ALTERNATING, "PSL": Family.PSL, "PSU": Family.PSU,
        "PSP": Family.PSP, "OMEGA": Family.OMEGA,
        "POMEGA+": Family.POMEGA_PLUS, "POMEGA-": Family.POMEGA_MINUS,
        "G2": Family.G2, "F4": Family.F4, "3D4": Family.TRIALITY_D4,
        "2B2": Family.SUZUKI, "2G2": Family.REE_G2, "TITS": Family.TITS}


def _descriptor(key) -> GroupDescriptor:
    fam = _FAM[key[0]]
    if fam is Family.ALTERNATING:
        return D(fam, key[1])
    if fam is Family.TITS:
        return D(fam, 0, 2, 1)
    if len(key) == 2:  # exceptional: (family, q)
        p, t = _pp(key[1])
        return D(fam, 0, p, t)
    n, q = key[1], key[2]
    p, t = _pp(q)
    return D(fam, n, p, t)


@pytest.mark.parametrize("key,expected", sorted(KNOWN_ORDERS.items(),
                                                key=lambda kv: str(kv[0])))
def test_known_orders(key, expected):
    g = _descriptor(key)
    assert order_int(g) == expected
    assert order(g).value == expected


def test_psp6_3_order_by_direct_multiplication():
    # (1/2) * 3^9 * (3^2-1)(3^4-1)(3^6-1), assembled independently
    expected = 3**9 * (3**2 - 1) * (3**4 - 1) * (3**6 - 1) // 2
    assert expected == 4585351680
    assert order_int(D(Family.PSP, 6, 3, 1)) == expected


def test_reference_table_below_one_million():
    rows = []
    for line in (DATA / "simple_orders_1e6.tsv").read_text().splitlines():
        if line and not line.startswith("#"):
            o, name = line.split("\t")
            rows.append((int(o), name))
    got = [(o.value, g.name) for g, o in enumerate_simple_groups(10**6 - 1)]
    assert got == sorted(rows)


def test_enumerate_smallest():
    got = enumerate_simple_groups(60)
    assert [(g.name, o.value) for g, o in got] == [("A5", 60)]
    assert enumerate_simple_groups(59) == []


def test_enumerate_monotone_prefix():
    small = enumerate_simple_groups(10**5)
    large = enumerate_simple_groups(10**6)
    assert large[: len(small)] == small


def test_enumerate_no_duplicate_classes():
    gs = [g for g, _ in enumerate_simple_groups(10**8)]
    assert len(gs) == len(set(gs))
    assert all(canonicalize(g) == g for g in gs)


def test_order_coincidence_members():
    at_20160 = [g.name for g, o in enumerate_simple_groups(20160)
                if o.value == 20160]
    assert at_20160 == ["A8", "PSL3(4)"]


@pytest.mark.parametrize("n,q", [(3, 3), (3, 5), (4, 3), (5, 3), (3, 9)])
def test_omega_equals_symplectic_order(n, q):
    p, t = _pp(q)
    assert order_int(D(Family.OMEGA, 2 * n + 1, p, t)) == order_int(
        D(Family.PSP, 2 * n, p, t))


def test_canonicalize_examples():
    assert canonicalize(D(Family.PSL, 2, 2, 2)) == D(Family.ALTERNATING, 5)
    assert canonicalize(D(Family.PSL, 2, 5, 1)) == D(Family.ALTERNATING, 5)
    assert canonicalize(D(Family.PSL, 2, 3, 2)) == D(Family.ALTERNATING, 6)
    assert canonicalize(D(Family.PSL, 4, 2, 1)) == D(Family.ALTERNATING, 8)
    assert canonicalize(D(Family.PSL, 3, 2, 1)) == D(Family.PSL, 2, 7, 1)
    assert canonicalize(D(Family.PSP, 4, 3, 1)) == D(Family.PSU, 4, 2, 1)
    # idempotent
    for g in [D(Family.ALTERNATING, 5), D(Family.PSL, 2, 7, 1),
              D(Family.PSU, 4, 2, 1)]:
        assert canonicalize(canonicalize(g)) == g


def test_aliases_record_both_unitary_spellings():
    aliases = class_aliases(D(Family.PSU, 3, 3, 1))
    assert "G2(2)'" in aliases
    assert any("PSU3(9)" in a for a in aliases)
    # the literal dimension-3 group over GF(9) stays a distinct group
    assert order_int(D(Family.PSU, 3, 3, 2)) == 42573600


@pytest.mark.parametrize("fam,n,p,t", [
    (Family.PSL, 2, 2, 1), (Family.PSL, 2, 3, 1),       # solvable
    (Family.PSU, 3, 2, 1),                              # solvable
    (Family.PSP, 4, 2, 1),                              # not simple
    (Family.G2, 0, 2, 1),                               # derived group proper
    (Family.OMEGA, 7, 2, 1),                            # even q: symplectic
    (Family.OMEGA, 5, 3, 1),                            # subscript too small
    (Family.SUZUKI, 0, 2, 1), (Family.SUZUKI, 0, 2, 2),
    (Family.REE_G2, 0, 3, 1), (Family.REE_F4, 0, 2, 1),
    (Family.ALTERNATING, 4, 0, 0),
    (Family.PSL, 1, 5, 1),
])
def test_invalid_parameters_rejected(fam, n, p, t):
    with pytest.raises(ValueError):
        GroupDescriptor(fam, n, p, t)


def test_steinberg_and_center():
    assert steinberg_exponent(D(Family.PSL, 4, 2, 1)) == 6
    assert steinberg_exponent(D(Family.E8, 0, 2, 1)) == 120
    assert sc_divisor(D(Family.PSL, 3, 2, 2)) == 3
    assert sc_divisor(D(Family.PSP, 6, 3, 1)) == 2
    assert sc_divisor(D(Family.SUZUKI, 0, 2, 3)) == 1


# hand-verified factorizations for the sporadic order data file
SPORADIC_FACTORS = {
    "M11": {2: 4, 3: 2, 5: 1, 11: 1},
    "M12": {2: 6, 3: 3, 5: 1, 11: 1},
    "J1": {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1},
    "M22": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1},
    "J2": {2: 7, 3: 3, 5: 2, 7: 1},
    "M23": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1},
    "HS": {2: 9, 3: 2, 5: 3, 7: 1, 11: 1},
    "J3": {2: 7, 3: 5, 5: 1, 17: 1, 19: 1},
    "M24": {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1},
    "McL": {2: 7, 3: 6, 5: 3, 7: 1, 11: 1},
    "He": {2: 10, 3: 3, 5: 2, 7: 3, 17: 1},
    "Ru": {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1},
    "Suz": {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1},
    "ON": {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1},
    "Co3": {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1},
    "Co2": {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1},
    "Fi22": {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1},
    "HN": {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1},
    "Ly": {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1},
    "Th": {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1},
    "Fi23": {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1},
    "Co1": {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1},
    "J4": {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1},
    "Fi24'": {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1},
    "B": {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1,
          31: 1, 47: 1},
    "M": {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1,
          29: 1, 31: 1, 41: 1, 47: 1, 59: 1, 71: 1},
}


def test_sporadic_data_integrity():
    table = sporadic_table()
    assert len(table) == 26
    for name, factors in SPORADIC_FACTORS.items():
        expected = 1
        for p, e in factors.items():
            expected *= p**e
        assert table[name].order == expected, name
        assert table[name].factored_order.as_map() == factors, name


def test_sporadic_columns():
    table = sporadic_table()
    # 16 sporadic groups have a 2-defect-zero character
    assert sum(info.has_2_defect_zero for info in table.values()) == 16
    no_defect = {n for n, i in table.items() if not i.has_2_defect_zero}
    assert no_defect == {"M12", "M22", "M24", "J2", "HS", "Suz", "Ru",
                         "Co1", "Co3", "B"}
    for name, info in table.items():
        # smallest missing prime is recomputable from the factorization
        primes = set(info.factored_order.primes())
        missing = 2
        while missing in primes:
            missing = _next_prime(missing)
        assert info.smallest_missing_prime == missing, name
        if info.largest_degree is not None:
            assert 1 < info.largest_degree**2 < info.order, name


def _next_prime(p: int) -> int:
    import sympy
    return int(sympy.nextprime(p))


def test_iter_lie_descriptors_characteristic_filter():
    gs = list(iter_lie_descriptors(10**8, characteristic=2))
    assert gs
    assert all(g.p == 2 for g in gs)
    names = {g.name for g in gs}
    assert "PSL4(2)" in names and "2B2(8)" in names and "2F4(2)'" in names


def test_lemma_kimmerle_smoke():
    # |S| < (|S|_{p'})^2 for everything small; the full sweep is acceptance
    for g, o in enumerate_simple_groups(10**7):
        n = o.value
        for p in o.primes():
            assert n < (n // o.p_part(p).value) ** 2, (g.name, p)
