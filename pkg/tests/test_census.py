import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobprimes import make_pair
from frobprimes import primes as P
from frobprimes.census import (box_prime_counts, count_box_primes, count_oracle, count_semigroup_primes,
                               gap_prime_count, ratio_result, semigroup_prime_mask)
from frobprimes.errors import DegenerateS, LimitTooLarge, ValidationError

from oracles import coprime_pairs_with_s_at_most, gaps, is_prime_td, pi_ab, primes_td


def box_oracle(a, b, x_max, y_max, bound):
    vals = []
    y = 0
    while (y_max is None or y <= y_max) and b * y < bound:
        for x in range(x_max + 1):
            n = a * x + b * y
            if n >= bound:
                break
            if is_prime_td(n):
                vals.append(n)
        y += 1
    return len(set(vals)), len(vals)


# pi(a, b) frozen from the enumeration oracle
FROZEN = [((2, 7), 1), ((3, 5), 2), ((3, 166), 13), ((3, 4), 1), ((2, 9), 1), ((10, 11), 9)]


@pytest.mark.parametrize("ab, expected", FROZEN)
def test_count_frozen(ab, expected):
    pair = make_pair(*ab)
    assert count_semigroup_primes(pair) == expected == pi_ab(*ab)
    assert count_oracle(pair) == expected


def test_count_3_5_enumerated():
    t = {n for n in range(8) if n not in gaps(3, 5)}
    assert [p for p in primes_td(7) if p in t] == [3, 5]


@pytest.mark.parametrize("ab", [(2, 3), (2, 5)])
def test_tiny_s(ab):
    pair = make_pair(*ab)
    assert count_semigroup_primes(pair) == pi_ab(*ab)
    if pair.frobenius < 2:
        with pytest.raises(DegenerateS):
            ratio_result(pair)


def test_ratio_result_3_166():
    r = ratio_result(make_pair(3, 166))
    assert (r.s, r.pi_ab, r.pi_s) == (329, 13, 66)
    assert r.exact_ratio == Fraction(13, 66)
    assert r.as_dict()["ratio"] == pytest.approx(13 / 66)


def test_oracle_limit():
    with pytest.raises(LimitTooLarge):
        count_oracle(make_pair(3, 5 * 10**6 + 2))


def test_shared_prime_array_slices():
    primes = P.primes_up_to(10**5)
    for a, b in [(3, 5), (3, 166), (10, 11), (97, 101)]:
        pair = make_pair(a, b)
        assert count_semigroup_primes(pair, primes) == count_semigroup_primes(pair)


def test_count_exhaustive_against_reachability_s_le_1e4():
    # the full S <= 10^5 sweep lives in the acceptance suite
    table = P.simple_sieve(10**4)
    primes = P.primes_up_to(10**4)
    n = 0
    for a, b in coprime_pairs_with_s_at_most(10**4):
        pair = make_pair(a, b)
        assert count_semigroup_primes(pair, primes) == count_oracle(pair, table), (a, b)
        n += 1
    assert n == 27524


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 60), st.integers(1, 200))
def test_count_against_enumeration(a, step):
    b = a + step
    if math.gcd(a, b) != 1:
        return
    assert count_semigroup_primes(make_pair(a, b)) == pi_ab(a, b)


def test_mask_agrees_with_membership():
    from frobprimes.semigroup import view

    pair = make_pair(13, 29)
    ps = P.primes_up_to(pair.frobenius)
    mask = semigroup_prime_mask(pair, ps)
    v = view(13, 29)
    assert mask.tolist() == [v.contains(int(p)) for p in ps]


@pytest.mark.parametrize("ab, expected", [((2, 7), 1), ((3, 5), 1), ((3, 166), 3), ((3, 4), 1), ((2, 9), 1),
                                          ((10, 11), 2)])
def test_gap_prime_count_frozen(ab, expected):
    a, b = ab
    pair = make_pair(a, b)
    s = pair.frobenius
    ref = sum(1 for p in gaps(a, b) if is_prime_td(p) and 8 * p > 7 * s)
    assert gap_prime_count(pair) == ref == expected


def test_gap_window_validation():
    with pytest.raises(ValidationError):
        gap_prime_count(make_pair(3, 5), 8, 8)


def test_gap_counts_exhaustive_small():
    primes = P.primes_up_to(5000)
    for a, b in coprime_pairs_with_s_at_most(5000):
        pair = make_pair(a, b)
        s = pair.frobenius
        g = [p for p in gaps(a, b) if is_prime_td(p)]
        assert gap_prime_count(pair, primes=primes) == sum(1 for p in g if 8 * p > 7 * s)
        assert gap_prime_count(pair, 1, 2, primes) == sum(1 for p in g if 2 * p > s)


def test_box_example():
    pair = make_pair(21, 202)
    assert count_box_primes(pair, 79, 9, pair.frobenius) == 95 == box_oracle(21, 202, 79, 9, pair.frobenius + 1)[0]


@pytest.mark.parametrize("a, b, x_max, y_max, strict", [
    (3, 5, 10, None, False), (3, 5, 10, 0, True), (7, 40, 3, 2, False), (20, 399, 150, None, True),
    (21, 227, 112, 9, False), (13, 100, 0, 5, False),
])
def test_box_counts_against_enumeration(a, b, x_max, y_max, strict):
    pair = make_pair(a, b)
    s = pair.frobenius
    bound = s if strict else s + 1
    assert box_prime_counts(pair, x_max, y_max, s, strict) == box_oracle(a, b, x_max, y_max, bound)


def test_box_limit_above_s_rejected():
    pair = make_pair(3, 5)
    with pytest.raises(ValidationError):
        count_box_primes(pair, 5, 5, 8)


def test_box_unbounded_covers_semigroup_primes():
    # with both coordinates free the box is all of T(a, b) up to S
    for a, b in [(3, 5), (3, 166), (10, 11), (20, 399)]:
        pair = make_pair(a, b)
        s = pair.frobenius
        assert count_box_primes(pair, s // a, None, s) == count_semigroup_primes(pair)
