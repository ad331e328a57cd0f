import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobprimes import primes as P
from frobprimes.errors import DomainError, IndexOutOfRange, LimitTooLarge, NotSorted

from oracles import distinct_prime_factors, eratosthenes, is_prime_td, phi_direct, primes_td, simpson_fixed


def collect(limit, **kw):
    seen = []
    P.stream_primes(limit, seen.append, **kw)
    return seen


@pytest.mark.parametrize("limit, expected", [(10, [2, 3, 5, 7]), (1, []), (2, [2]), (0, [])])
def test_stream_primes_examples(limit, expected):
    assert collect(limit) == expected


def test_stream_matches_trial_division():
    assert collect(20000) == primes_td(20000)


@pytest.mark.parametrize("seg", [2, 3, 10, 64, 1001])
def test_segment_length_does_not_change_stream(seg):
    assert collect(5000, segment_length=seg) == primes_td(5000)


def test_workers_do_not_change_stream():
    one = P.PrimeSieve(300000, 4096).to_array()
    many = P.PrimeSieve(300000, 4096, workers=3).to_array()
    assert np.array_equal(one, many)
    assert len(one) == len(set(one.tolist()))


def test_stream_limit_too_large():
    with P.sieve_ceiling(1000):
        with pytest.raises(LimitTooLarge):
            P.stream_primes(1001, lambda p: None)
        with pytest.raises(LimitTooLarge):
            P.prime_count(10**4)


@pytest.mark.parametrize("x, expected", [(2, 1), (0, 0), (1, 0)])
def test_prime_count_trivial(x, expected):
    assert P.prime_count(x) == expected


def test_prime_count_1e4_trial_division():
    assert P.prime_count(10**4) == len(primes_td(10**4)) == 1229


def test_prime_count_1e6_simple_sieve():
    assert P.prime_count(10**6) == len(eratosthenes(10**6)) == 78498


def test_prime_count_all_x_le_1e5():
    ref = np.cumsum([is_prime_td(n) for n in range(10**5 + 1)])
    pi = np.cumsum(P.prime_table(10**5)[: 10**5 + 1])
    assert np.array_equal(ref, pi)


def test_prime_count_above_cache_limit_path():
    # force the streaming path by shrinking the cache limit
    old = P.CACHE_LIMIT
    try:
        P.CACHE_LIMIT = 1000
        assert P.prime_count(123457) == len(eratosthenes(123457))
        assert P.prime_count_ap(123457, 10, 3) == sum(1 for p in eratosthenes(123457) if p % 10 == 3)
    finally:
        P.CACHE_LIMIT = old


@pytest.mark.parametrize("points, expected", [([2, 10, 100], [(2, 1), (10, 4), (100, 25)]), ([], []), ([1], [(1, 0)])])
def test_prime_count_at_examples(points, expected):
    assert list(P.prime_count_at(points)) == expected


def test_prime_count_at_not_sorted():
    with pytest.raises(NotSorted):
        P.prime_count_at([10, 2])


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 10**7), min_size=1, max_size=40))
def test_prime_count_at_pointwise(points):
    points = sorted(points)
    table = P.prime_count_at(points)
    for x, c in table:
        assert c == P.prime_count(x)


def test_prime_count_at_streaming_and_resume():
    pts = [5, 97, 1000, 65535, 65536, 99991, 250000]
    full = P.prime_count_at(pts, segment_length=1000, resume=(1, 0))
    assert list(full) == [(x, P.prime_count(x)) for x in pts]
    tail = P.prime_count_at(pts[3:], resume=(1000, 168), segment_length=777)
    assert list(tail) == list(full)[3:]
    batches = []
    P.prime_count_at(pts, resume=(2, 1), segment_length=5000, on_segment=batches.append)
    assert len(batches) > 1
    assert [c for b in batches for c in b] == list(full)
    with pytest.raises(ValueError):
        P.prime_count_at([10], resume=(10, 4))


def test_checkpoint_csv_roundtrip(tmp_path):
    t = P.prime_count_at([10, 100, 1000])
    path = tmp_path / "cache.csv"
    t.to_csv(path)
    assert path.read_text() == "x,pi\n10,4\n100,25\n1000,168\n"
    assert P.CheckpointTable.from_csv(path) == t


def test_checkpoint_csv_rejects_unsorted(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("x,pi\n100,25\n10,4\n")
    with pytest.raises(NotSorted):
        P.CheckpointTable.from_csv(path)
    path.write_text("n,count\n")
    with pytest.raises(ValueError):
        P.CheckpointTable.from_csv(path)


@pytest.mark.parametrize("x, m, l, expected", [(10, 4, 1, 1), (20, 3, -1, 4), (10, 1, 0, 4)])
def test_prime_count_ap_examples(x, m, l, expected):
    assert P.prime_count_ap(x, m, l) == expected


def test_prime_count_ap_enumeration():
    ps = primes_td(20)
    assert [p for p in ps if p % 3 == 2] == [2, 5, 11, 17]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 50), st.integers(0, 10**6), st.integers(-200, -1))
def test_residue_partition(m, x, neg_l):
    total = sum(P.prime_count_ap(x, m, l) for l in range(m))
    assert total == P.prime_count(x)
    assert P.prime_count_ap(x, m, neg_l) == P.prime_count_ap(x, m, neg_l % m)


@pytest.mark.parametrize("n, expected", [(2, True), (329, False), (331, True), (1, False), (0, False)])
def test_is_prime_examples(n, expected):
    assert P.is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert all(P.is_prime(n) == is_prime_td(n) for n in range(20000))


@pytest.mark.parametrize("n, expected", [
    (2**61 - 1, True),
    (3215031751, False),            # strong pseudoprime to bases 2, 3, 5, 7
    (3825123056546413051, False),   # strong pseudoprime to the first nine prime bases
    (18446744073709551557, True),   # largest prime below 2^64
    (4611686018427387847, True),
    (4611686018427387849, False),
])
def test_is_prime_large(n, expected):
    assert P.is_prime(n) is expected
    if n < 10**13:
        assert is_prime_td(n) is expected


@pytest.mark.parametrize("n, phi", [(1, 1), (30030, 5760), (510510, 92160)])
def test_euler_phi_examples(n, phi):
    assert P.euler_phi(n) == phi


def test_phi_product_formula():
    for n in (30030, 510510):
        assert P.euler_phi(n) == math.prod(p - 1 for p in distinct_prime_factors(n))


@pytest.mark.parametrize("n, w", [(1, 0), (30030, 6), (12, 2)])
def test_omega_examples(n, w):
    assert P.omega(n) == w


def test_phi_omega_against_direct_factorisation():
    phi, om = P.totient_omega_tables(10**5)
    ns = list(range(1, 3001)) + list(range(10**5 - 500, 10**5 + 1))
    for n in ns:
        assert P.euler_phi(n) == phi[n] == phi_direct(n)
        assert P.omega(n) == om[n] == len(distinct_prime_factors(n))


def test_phi_omega_tables_full_range_consistency():
    phi, om = P.totient_omega_tables(10**5)
    for n in range(1, 10**5 + 1, 7):
        f = distinct_prime_factors(n)
        assert om[n] == len(f)
        assert phi[n] == n * math.prod(p - 1 for p in f) // math.prod(f)
    ps = np.flatnonzero(P.prime_table(10**5)[: 10**5 + 1])
    assert np.array_equal(phi[ps], ps - 1)


@pytest.mark.parametrize("t, value", [(1, 2), (6, 30030), (7, 510510)])
def test_primorial(t, value):
    assert P.primorial(t) == value


def test_primorial_bounds():
    assert P.primorial(15) == math.prod(primes_td(47))
    for t in (0, 16):
        with pytest.raises(IndexOutOfRange):
            P.primorial(t)


def test_li_examples():
    assert P.logarithmic_integral(2) == 0.0
    oracle = simpson_fixed(lambda u: math.exp(u) / u, math.log(2), math.log(10**6), 10**5)
    assert abs(oracle - 78626.50399568) < 1e-6
    assert P.logarithmic_integral(10**6) == pytest.approx(oracle, rel=1e-9)
    assert P.logarithmic_integral(10**6) < P.logarithmic_integral(2 * 10**6)
    with pytest.raises(DomainError):
        P.logarithmic_integral(1.5)


@pytest.mark.parametrize("x", [3, 10, 1000, 10**6, 1474279333, 10**10])
def test_li_against_mpmath(x):
    ref = float(mpmath.li(x) - mpmath.li(2))
    assert P.logarithmic_integral(x) == pytest.approx(ref, rel=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.floats(2.0, 1e9), st.floats(0.0, 1.0))
def test_li_additivity(x, frac):
    y = 2 + (x - 2) * frac
    whole = P.logarithmic_integral(x)
    split = P.logarithmic_integral(y) + P.adaptive_simpson(lambda t: 1 / math.log(t), y, x, tol=1e-12) if y < x else whole
    assert split == pytest.approx(whole, rel=1e-8, abs=1e-9)
