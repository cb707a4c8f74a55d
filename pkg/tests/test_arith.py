from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from simplecod.arith import (
    FactoredNatural,
    factorial_factored,
    factorize,
    int_p_part,
    mult_order,
    p_part,
    p_prime_part,
    prime_powers_ascending,
)


def trial_division(n: int) -> dict[int, int]:
    """Independent oracle for factorizations used in these tests."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@pytest.mark.parametrize("n", [1, 2, 20160, 4585351680, 10**9 + 7, 2**20,
                               3 * 5 * 7 * 11 * 13, 97 * 89])
def test_factorize_matches_trial_division(n):
    assert dict(factorize(n)) == trial_division(n)


def test_factorize_20160():
    assert dict(factorize(20160)) == {2: 6, 3: 2, 5: 1, 7: 1}


def test_p_part_examples():
    n = FactoredNatural.from_int(20160)
    assert p_part(n, 2).value == 64
    assert p_prime_part(n, 2).value == 315
    sixty = FactoredNatural.from_int(60)
    assert p_part(sixty, 7).value == 1
    assert p_prime_part(sixty, 7).value == 60
    power = FactoredNatural.from_int(3**8)
    assert p_part(power, 3).value == 3**8
    assert p_prime_part(power, 3).value == 1


@given(st.integers(min_value=2, max_value=10**6),
       st.sampled_from([2, 3, 5, 7, 11]))
def test_p_part_roundtrip(n, p):
    f = FactoredNatural.from_int(n)
    a, b = p_part(f, p), p_prime_part(f, p)
    assert a.value * b.value == n
    assert b.value % p != 0
    assert a.value == int_p_part(n, p)


def test_factored_arithmetic():
    a = FactoredNatural.from_int(12)
    b = FactoredNatural.from_int(18)
    assert (a * b).value == 216
    assert (a * b).exact_div(a).value == 18
    with pytest.raises(ValueError):
        a.exact_div(b)
    assert FactoredNatural.from_int(6).divides(a)
    assert not FactoredNatural.from_int(8).divides(a)


@pytest.mark.parametrize("p,r,expect", [(2, 7, 3), (2, 5, 4), (3, 13, 3),
                                        (2, 3, 2), (5, 2, 1), (3, 7, 6)])
def test_mult_order(p, r, expect):
    assert mult_order(p, r) == expect


@given(st.sampled_from([2, 3, 5, 7]), st.sampled_from([3, 5, 7, 11, 13, 17, 19]))
def test_mult_order_is_minimal(p, r):
    if p % r == 0:
        return
    e = mult_order(p, r)
    assert pow(p, e, r) == 1
    assert all(pow(p, k, r) != 1 for k in range(1, e))


def test_factorial_factored():
    f = factorial_factored(10)
    assert f.value == 3628800
    assert f.exponent(2) == 8 and f.exponent(3) == 4 and f.exponent(7) == 1


def test_prime_powers_ascending():
    qs = [q for q, _, _ in prime_powers_ascending(32)]
    assert qs == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
