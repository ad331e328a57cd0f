import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobprimes import BadOrder, IndexOutOfRange, NotCoprime, Overflow, make_pair
from frobprimes._kernels import reach_table
from frobprimes.semigroup import SemigroupView, frobenius, view

from oracles import coprime_pairs_with_s_at_most, gaps, reach, representable


@st.composite
def small_pairs(draw, s_max=10**5):
    a = draw(st.integers(2, 300))
    b_hi = (s_max + a) // (a - 1)
    if b_hi <= a:
        b_hi = a + 1
    b = draw(st.integers(a + 1, max(a + 1, b_hi)))
    if math.gcd(a, b) != 1 or a * b - a - b > s_max:
        b = a + 1
    return make_pair(a, b)


def test_make_pair_ok():
    p = make_pair(3, 5)
    assert (p.a, p.b) == (3, 5)


@pytest.mark.parametrize("a, b, exc", [(4, 6, NotCoprime), (5, 3, BadOrder), (1, 2, BadOrder), (3, 3, BadOrder),
                                       (2**31 + 1, 2**31 + 2, Overflow)])
def test_make_pair_rejects(a, b, exc):
    with pytest.raises(exc):
        make_pair(a, b)


@pytest.mark.parametrize("a, b, s", [(3, 5, 7), (2, 7, 5), (3, 166, 329)])
def test_frobenius(a, b, s):
    assert frobenius(make_pair(a, b)) == s
    assert view(a, b).frobenius == s


def test_view_fields():
    v = view(3, 5)
    assert v.b * v.b_inverse % v.a == 1
    assert 1 <= v.b_inverse <= v.a - 1
    assert view(2, 9).b_inverse == 1


@pytest.mark.parametrize("n, k", [(7, 2), (8, 1), (0, 0)])
def test_class_index(n, k):
    assert view(3, 5).class_index(n) == k


def test_class_index_by_enumeration():
    v = view(7, 19)
    for n in range(200):
        (k,) = [k for k in range(7) if (k * 19 - n) % 7 == 0]
        assert v.class_index(n) == k


def test_class_min():
    v = view(3, 5)
    assert [v.class_min(k) for k in range(3)] == [0, 5, 10]
    with pytest.raises(IndexOutOfRange):
        v.class_min(3)


@pytest.mark.parametrize("n, expected", [(7, False), (8, True), (4, False), (-1, False), (0, True)])
def test_contains_examples(n, expected):
    assert view(3, 5).contains(n) is expected
    assert (n in view(3, 5)) is expected


def test_contains_4_brute_force():
    assert 4 not in representable(3, 5, 4)


def test_enumerate_class():
    v = view(3, 5)
    assert v.enumerate_class(0) == [3, 6]
    assert v.enumerate_class(1) == [5]
    assert v.enumerate_class(2) == []
    with pytest.raises(IndexOutOfRange):
        v.enumerate_class(-1)


@pytest.mark.parametrize("a, b, g", [(3, 5, 4), (2, 3, 1), (3, 4, 3)])
def test_gap_count(a, b, g):
    assert view(a, b).gap_count() == g == len(gaps(a, b))


def test_gap_count_exhaustive_s_le_1e4():
    for a, b in coprime_pairs_with_s_at_most(10**4):
        v = view(a, b)
        t = reach_table(a, b, v.frobenius)
        assert v.gap_count() == int(np.count_nonzero(~t)), (a, b)


def test_frobenius_is_odd_and_not_member():
    for a, b in coprime_pairs_with_s_at_most(2000):
        v = view(a, b)
        assert v.frobenius % 2 == 1
        assert (a - 1) * (b - 1) == v.frobenius + 1
        assert not v.contains(v.frobenius)


@settings(max_examples=150, deadline=None)
@given(small_pairs())
def test_contains_matches_reachability(pair):
    v = SemigroupView(pair)
    s, a, b = v.frobenius, pair.a, pair.b
    r = reach(a, b, s + a + b)
    for n in range(s + a + b + 1):
        assert v.contains(n) == r[n]


@settings(max_examples=150, deadline=None)
@given(small_pairs())
def test_symmetry_and_completeness(pair):
    v = SemigroupView(pair)
    s = v.frobenius
    for n in range(s + 1):
        assert v.contains(n) != v.contains(s - n)
    for n in range(s + 1, s + pair.a * pair.b + 1, max(1, (pair.a * pair.b) // 500)):
        assert v.contains(n)


@settings(max_examples=100, deadline=None)
@given(small_pairs(s_max=10**4))
def test_partition_lemma(pair):
    v = SemigroupView(pair)
    s = v.frobenius
    parts = [set(v.enumerate_class(k)) for k in range(pair.a)]
    union = set().union(*parts)
    assert sum(len(p) for p in parts) == len(union)
    assert union == {n for n in representable(pair.a, pair.b, s) if n >= 1}
    for n in range(s + 1):
        assert (v.class_min(v.class_index(n)) <= n) == v.contains(n)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 10**6), st.integers(1, 10**6), st.integers(-10**12, 10**12))
def test_threshold_rule_large_n(a, step, n):
    b = a + step
    if math.gcd(a, b) != 1:
        return
    v = view(a, b)
    # a witness y with n - b*y >= 0 and divisible by a exists iff y = class_index(n) works
    k = v.class_index(n)
    expected = n >= 0 and n - k * b >= 0 and (n - k * b) % a == 0
    assert v.contains(n) == expected
