import pytest
import sympy

from simplecod.catalog import Family, GroupDescriptor, iter_lie_descriptors, order
from simplecod.invariants import (
    FROZEN_EXCEPTIONS,
    ArtinInvariants,
    NotCyclotomic,
    NotGeneric,
    artin_invariants,
    cyclotomic_eval,
    cyclotomic_factorization,
    mult_order,
    table1_prediction,
)


def D(fam, n=0, p=0, t=0):
    return GroupDescriptor(fam, n, p, t)


@pytest.mark.parametrize("i,q,expect", [(1, 2, 1), (2, 2, 3), (6, 2, 3),
                                        (12, 3, 73), (4, 3, 10), (30, 2, 331)])
def test_cyclotomic_values(i, q, expect):
    assert cyclotomic_eval(i, q) == expect


def test_cyclotomic_against_sympy_polynomials():
    for i in list(range(1, 41)) + [60]:
        poly = sympy.cyclotomic_poly(i, sympy.Symbol("x"))
        for q in (2, 3, 5, 7, 9):
            assert cyclotomic_eval(i, q) == int(poly.subs("x", q))


def test_cyclotomic_product_identity():
    for n in range(1, 61):
        for q in (2, 3, 5, 7, 11, 13, 17):
            prod = 1
            for d in range(1, n + 1):
                if n % d == 0:
                    prod *= cyclotomic_eval(d, q)
            assert prod == q**n - 1


def test_cyclotomic_lower_bound():
    # Phi_i(q) >= (q-1)^deg(Phi_i)
    for i in range(1, 31):
        deg = int(sympy.totient(i))
        for q in (2, 3, 4, 5, 7, 8, 9):
            assert cyclotomic_eval(i, q) >= (q - 1) ** deg


def test_factorization_psl2_8():
    fac = cyclotomic_factorization(D(Family.PSL, 2, 2, 3))
    assert fac.divisor == 1 and fac.p_exponent == 1
    assert fac.q_factors == ((1, 1), (2, 1))
    assert fac.p_factors == ((1, 1), (2, 1), (3, 1), (6, 1))
    assert fac.q_form_value() == fac.p_form_value() == 504


def test_factorization_psp6_3():
    fac = cyclotomic_factorization(D(Family.PSP, 6, 3, 1))
    assert fac.divisor == 2 and fac.p_exponent == 9
    assert fac.q_factors == ((1, 3), (2, 3), (3, 1), (4, 1), (6, 1))
    assert fac.q_form_value() == 4585351680


def test_factorization_psl4_2():
    fac = cyclotomic_factorization(D(Family.PSL, 4, 2, 1))
    assert fac.p_exponent == 6
    assert fac.q_factors == ((1, 3), (2, 2), (3, 1), (4, 1))
    assert fac.q_form_value() == 20160


def test_factorization_rejects_suzuki_ree():
    for g in (D(Family.SUZUKI, 0, 2, 3), D(Family.REE_G2, 0, 3, 3),
              D(Family.REE_F4, 0, 2, 3), GroupDescriptor(Family.TITS, 0, 2, 1)):
        with pytest.raises(NotCyclotomic):
            cyclotomic_factorization(g)


def test_factorization_reconstructs_orders_in_sweep():
    for g in iter_lie_descriptors(10**14, max_q=9, max_rank=8, max_t=4):
        if g.family in (Family.SUZUKI, Family.REE_G2, Family.REE_F4,
                        Family.TITS):
            continue
        fac = cyclotomic_factorization(g)
        assert fac.q_form_value() == order(g).value
        assert fac.p_form_value() == order(g).value


@pytest.mark.parametrize("p,r,expect", [(2, 7, 3), (2, 5, 4), (3, 13, 3)])
def test_mult_order_examples(p, r, expect):
    assert mult_order(p, r) == expect


@pytest.mark.parametrize("g,omega,psi", [
    (D(Family.PSL, 3, 2, 2), 4, 3),     # stated in the collision analysis
    (D(Family.PSP, 6, 3, 1), 6, 4),
    (D(Family.PSL, 4, 2, 1), 4, 3),
    (D(Family.SUZUKI, 0, 2, 5), 20, 5),
    (D(Family.G2, 0, 3, 1), 6, 3),
])
def test_artin_examples(g, omega, psi):
    inv = artin_invariants(g)
    assert (inv.omega, inv.psi) == (omega, psi)
    assert not inv.degenerate


def test_artin_degenerate():
    inv = artin_invariants(D(Family.PSL, 2, 7, 1))
    assert inv.omega == inv.psi == 1 and inv.degenerate


def test_artin_multiset_semantics():
    # PSL2(4): orders of 2 modulo {3, 5} are {2, 4}; identical either way
    inv_set = artin_invariants(D(Family.PSL, 2, 2, 2))
    inv_multi = artin_invariants(D(Family.PSL, 2, 2, 2), multiset=True)
    assert (inv_set.omega, inv_set.psi) == (inv_multi.omega, inv_multi.psi) == (4, 2)
    # PSp6(3): orders {1, 4, 6, 3} distinct, so multiset agrees there too;
    # E7(2) has repeated order values and the two conventions separate
    g = D(Family.E7, 0, 2, 1)
    s, m = artin_invariants(g), artin_invariants(g, multiset=True)
    assert s.omega == m.omega
    assert m.psi >= s.psi


def test_table1_rows():
    assert table1_prediction(D(Family.PSL, 5, 3, 1)) == ArtinInvariants(5, 4)
    assert table1_prediction(D(Family.E8, 0, 2, 1)) == ArtinInvariants(30, 24)
    # Suzuki: t = 3 mod 6 vs t = +-1 mod 6
    assert table1_prediction(D(Family.SUZUKI, 0, 2, 3)) == ArtinInvariants(12, 4)
    assert table1_prediction(D(Family.SUZUKI, 0, 2, 5)) == ArtinInvariants(20, 5)
    assert isinstance(table1_prediction(D(Family.PSL, 3, 2, 2)), NotGeneric)
    assert isinstance(table1_prediction(D(Family.PSL, 2, 3, 2)), NotGeneric)
    assert isinstance(table1_prediction(D(Family.G2, 0, 2, 2)), NotGeneric)


def test_definition_matches_table_outside_frozen_exceptions():
    seen = set()
    for g in iter_lie_descriptors(10**14, max_q=9, max_rank=8, max_t=4):
        if g in seen:
            continue
        seen.add(g)
        pred = table1_prediction(g)
        if isinstance(pred, NotGeneric):
            continue
        inv = artin_invariants(g)
        if (inv.omega, inv.psi) != (pred.omega, pred.psi):
            assert g in FROZEN_EXCEPTIONS, g.name
    for g in FROZEN_EXCEPTIONS:
        pred = table1_prediction(g)
        inv = artin_invariants(g)
        assert not isinstance(pred, NotGeneric)
        assert (inv.omega, inv.psi) != (pred.omega, pred.psi)


def test_artin_equal_on_coincidence_pairs():
    # necessary condition behind the collision scan
    pairs = [
        (D(Family.PSL, 4, 2, 1), D(Family.PSL, 3, 2, 2)),
        (D(Family.OMEGA, 7, 3, 1), D(Family.PSP, 6, 3, 1)),
        (D(Family.OMEGA, 9, 3, 1), D(Family.PSP, 8, 3, 1)),
        (D(Family.OMEGA, 7, 5, 1), D(Family.PSP, 6, 5, 1)),
    ]
    for a, b in pairs:
        ia, ib = artin_invariants(a), artin_invariants(b)
        assert (ia.omega, ia.psi) == (ib.omega, ib.psi)
