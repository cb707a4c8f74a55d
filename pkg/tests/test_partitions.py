from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from simplecod.arith import int_p_part
from simplecod.partitions import (
    Partition,
    alternating_defect_zero,
    alternating_degrees,
    b_alternating,
    branching_lower_bound_holds,
    defect_zero_closed_form,
    f_alternating,
    has_p_core,
    has_p_core_brute,
    hook_degree,
    partitions_of,
    restriction_upper_bound_holds,
    vk_bounds_hold,
)


def test_partition_counts():
    assert sum(1 for _ in partitions_of(10)) == 42
    assert sum(1 for _ in partitions_of(20)) == 627


def test_conjugate_involution_exhaustive():
    for m in range(1, 13):
        for parts in partitions_of(m):
            lam = Partition(parts)
            assert lam.conjugate().conjugate() == lam
            assert sorted(lam.hooks()) == sorted(lam.conjugate().hooks())


@given(st.integers(min_value=1, max_value=16))
@settings(max_examples=16)
def test_hook_degree_conjugation_invariance(m):
    for parts in partitions_of(m):
        lam = Partition(parts)
        assert hook_degree(lam) == hook_degree(lam.conjugate())


def test_hook_degree_examples():
    assert hook_degree((10,)) == 1
    assert hook_degree((1,) * 9) == 1
    assert hook_degree((4, 3, 2, 1)) == 768
    assert sorted(Partition((4, 3, 2, 1)).hooks()) == [1, 1, 1, 1, 3, 3, 3, 5, 5, 7]


def test_hook_degrees_sum_of_squares():
    # the hook-length formula reproduces the regular character identity
    for m in range(1, 15):
        assert sum(hook_degree(p) ** 2 for p in partitions_of(m)) == factorial(m)


def test_alternating_degrees_a5():
    assert alternating_degrees(5).degrees == (1, 3, 3, 4, 5)


def test_alternating_degrees_a10_paper_data():
    degs = alternating_degrees(10).degrees
    assert degs.count(384) == 2      # the two 2-defect-zero characters
    assert 567 in degs               # the unique 3-defect-zero character
    assert int_p_part(384, 2) == int_p_part(factorial(10) // 2, 2)
    assert int_p_part(567, 3) == int_p_part(factorial(10) // 2, 3)


def test_degrees_square_sum():
    for m in range(5, 21):
        prof = alternating_degrees(m)
        assert sum(d * d for d in prof.degrees) == factorial(m) // 2


def test_b_and_f_values():
    assert b_alternating(5) == 5 and f_alternating(5) == 12
    assert b_alternating(6) == 10 and f_alternating(6) == 36
    assert f_alternating(6) > f_alternating(5)
    assert b_alternating(10) == 567 and f_alternating(10) == 3200
    assert b_alternating(19) == 64664600


def test_f_is_integral_on_alternating():
    for m in range(5, 26):
        assert f_alternating(m).denominator == 1


@pytest.mark.parametrize("m,p,expect", [(10, 2, True), (5, 2, False),
                                        (10, 3, True), (6, 2, True),
                                        (11, 2, False)])
def test_has_p_core(m, p, expect):
    assert has_p_core(m, p) is expect


def test_p_core_agrees_with_hook_scan():
    for p in (2, 3, 5, 7):
        for m in range(1, 31):
            assert has_p_core(m, p) == has_p_core_brute(m, p), (m, p)


def test_two_cores_are_triangular():
    triangular = {k * (k + 1) // 2 for k in range(1, 12)}
    for m in range(1, 61):
        assert has_p_core(m, 2) == (m in triangular)


@pytest.mark.parametrize("m,p,expect", [
    (10, 2, True), (10, 3, True), (11, 2, False),
    (12, 3, True),   # 3*12+1 = 37 prime, 37 = 1 mod 3
    (23, 3, False),  # 3*23+1 = 70 = 2*5*7; 2 = 2 mod 3 to an odd power
    (15, 2, True),   # staircase split; outside the naturals-only families
])
def test_defect_zero_examples(m, p, expect):
    assert alternating_defect_zero(m, p) is expect
    assert defect_zero_closed_form(m, p) is expect


def test_defect_zero_closed_forms_match_brute_force():
    for m in range(5, 46):
        for p in (2, 3):
            assert alternating_defect_zero(m, p) == defect_zero_closed_form(m, p)


def test_defect_zero_naturals_reading_fails():
    # with k restricted to naturals the printed 2-defect-zero families miss
    # the odd-indexed staircases; the oracle shows those m do carry one
    naturals = {2 * k * k + k for k in range(0, 6)} | {
        2 * k * k + k + 2 for k in range(0, 6)}
    missed = [m for m in range(5, 46)
              if alternating_defect_zero(m, 2) and m not in naturals]
    assert missed == [6, 8, 15, 17, 28, 30, 45]


def test_printed_3defect_orientation_contradicts_usage():
    # as printed, existence iff some prime l = 2 mod 3 divides 3m+1 to an
    # odd power; at m = 10 (3m+1 = 31) that denies the degree-567 character
    m = 10
    printed_form = False  # 31 has no prime factor = 2 mod 3
    assert alternating_defect_zero(m, 3) is True
    assert printed_form is not True


def test_bounds_small_range():
    for m in range(5, 21):
        assert vk_bounds_hold(m)
    for m in range(5, 20):
        assert branching_lower_bound_holds(m)
        assert restriction_upper_bound_holds(m)
        assert b_alternating(m + 1) < (m + 1) * b_alternating(m)


def test_f_monotone_small_range():
    values = [f_alternating(m) for m in range(5, 26)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_partition_cap():
    with pytest.raises(ValueError):
        list(partitions_of(61))
