"""numba kernels for the exhaustive loops (oracle, box counts, class sums).

Kept apart so that light CLI commands never pay numba's import cost.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def reach_prime_count(a, b, is_prime):
    """Primes <= S in T(a, b) by dynamic-programming reachability over [0, S]."""
    s = a * b - a - b
    if s < 2:
        return 0
    reach = np.zeros(s + 1, dtype=np.bool_)
    reach[0] = True
    count = 0
    for n in range(1, s + 1):
        r = (n >= a and reach[n - a]) or (n >= b and reach[n - b])
        reach[n] = r
        if r and is_prime[n]:
            count += 1
    return count


@njit(cache=True)
def reach_table(a, b, top):
    reach = np.zeros(top + 1, dtype=np.bool_)
    reach[0] = True
    for n in range(1, top + 1):
        reach[n] = (n >= a and reach[n - a]) or (n >= b and reach[n - b])
    return reach


@njit(cache=True)
def box_prime_counts(a, b, x_max, y_max, bound, is_prime):
    """(distinct prime values, (x, y) pairs hitting a prime) over the box.

    Values a*x + b*y with 0 <= x <= x_max, 0 <= y <= y_max and value < bound.
    ``y_max < 0`` means unbounded (the value bound cuts it off).
    """
    if bound <= 0:
        return 0, 0
    ny = (bound - 1) // b
    if y_max >= 0 and y_max < ny:
        ny = y_max
    nx = min(x_max, (bound - 1) // a)
    cap = (nx + 1) * (ny + 1)
    found = np.empty(cap, dtype=np.int64)
    pairs = 0
    for y in range(ny + 1):
        base = b * y
        for x in range(nx + 1):
            v = base + a * x
            if v >= bound:
                break
            if is_prime[v]:
                found[pairs] = v
                pairs += 1
    if pairs == 0:
        return 0, 0
    vals = np.sort(found[:pairs])
    distinct = 1
    for i in range(1, pairs):
        if vals[i] != vals[i - 1]:
            distinct += 1
    return distinct, pairs


@njit(cache=True)
def class_counts(a, b, primes):
    """counts[k] = #{p in primes : p = k*b (mod a), p >= k*b}; primes must be <= S."""
    k_of = np.zeros(a, dtype=np.int64)
    for k in range(a):
        k_of[(k * b) % a] = k
    counts = np.zeros(a, dtype=np.int64)
    for i in range(primes.shape[0]):
        p = primes[i]
        k = k_of[p % a]
        if p >= k * b:
            counts[k] += 1
    return counts

