"""Exact prime generation and counting, plus the arithmetic helpers
(phi, omega, primorial) and the logarithmic integral.

Sieving is an odd-only segmented sieve of Eratosthenes on numpy masks.
Everything up to ``CACHE_LIMIT`` is memoised as one read-only array of
primes; larger limits are streamed segment by segment.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, IndexOutOfRange, LimitTooLarge, NotSorted

DEFAULT_CEILING = 10**10
DEFAULT_SEGMENT = 2**21
CACHE_LIMIT = 10**8

_ceiling = DEFAULT_CEILING


def get_ceiling() -> int:
    return _ceiling


def set_ceiling(value: int) -> None:
    global _ceiling
    _ceiling = int(value)


@contextmanager
def sieve_ceiling(value: int):
    """Temporarily change the largest limit any sieve may reach."""
    old = get_ceiling()
    set_ceiling(value)
    try:
        yield
    finally:
        set_ceiling(old)


def check_limit(limit: int) -> None:
    if limit > _ceiling:
        raise LimitTooLarge(limit, _ceiling)


def simple_sieve(n: int) -> np.ndarray:
    """Boolean primality table for [0, n]."""
    is_p = np.ones(max(n + 1, 2), dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return is_p[: n + 1]


_table = simple_sieve(1 << 16)
_table.setflags(write=False)


def prime_table(n: int) -> np.ndarray:
    """Read-only boolean primality table covering at least [0, n] (memoised)."""
    global _table
    if n >= len(_table):
        check_limit(n)
        _table = simple_sieve(max(n, 2 * len(_table)) if n <= CACHE_LIMIT // 2 else n)
        _table.setflags(write=False)
    return _table


def _sieve_segment(low: int, high: int, base: np.ndarray) -> np.ndarray:
    """Primes in the odd-aligned window [low, high); low is odd, base holds odd primes."""
    mask = np.ones((high - low + 1) // 2, dtype=bool)
    for p in base:
        p = int(p)
        pp = p * p
        if pp >= high:
            break
        start = max(pp, -(-low // p) * p)
        if not start & 1:
            start += p
        if start < high:
            mask[(start - low) // 2 :: p] = False
    if low == 1:
        mask[0] = False
    return low + 2 * np.flatnonzero(mask).astype(np.int64)


@dataclass(frozen=True)
class PrimeSieve:
    """Segmented sieve over [start, limit].

    ``segments()`` yields ascending int64 arrays; concatenated they are
    exactly the primes in range, whatever the worker count.
    """

    limit: int
    segment_length: int = DEFAULT_SEGMENT
    start: int = 0
    workers: int = 1

    def __post_init__(self):
        check_limit(self.limit)
        if self.segment_length < 2:
            raise ValueError("segment_length must be >= 2")

    @property
    def base_primes(self) -> np.ndarray:
        r = math.isqrt(max(self.limit, 0))
        return np.flatnonzero(simple_sieve(r)).astype(np.int64)

    def _windows(self) -> Iterator[tuple[int, int]]:
        low = max(self.start, 3)
        low |= 1
        span = self.segment_length + (self.segment_length & 1)
        while low <= self.limit:
            high = min(low + span, self.limit + 1)
            yield low, high
            low += span

    def segments(self) -> Iterator[np.ndarray]:
        if self.start <= 2 <= self.limit:
            yield np.array([2], dtype=np.int64)
        base = self.base_primes
        base = base[base > 2]
        windows = self._windows()
        if self.workers > 1:
            with ThreadPoolExecutor(self.workers) as pool:
                # map preserves order, so emission stays ascending
                yield from pool.map(lambda w: _sieve_segment(w[0], w[1], base), windows)
        else:
            for low, high in windows:
                yield _sieve_segment(low, high, base)

    def __iter__(self) -> Iterator[int]:
        for seg in self.segments():
            yield from seg.tolist()

    def to_array(self) -> np.ndarray:
        parts = list(self.segments())
        if not parts:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(parts)

    def count(self) -> int:
        return sum(len(seg) for seg in self.segments())


_cache = np.empty(0, dtype=np.int64)
_cache_limit = 1


def primes_up_to(n: int) -> np.ndarray:
    """Read-only ascending array of all primes <= n (memoised)."""
    global _cache, _cache_limit
    check_limit(n)
    if n <= _cache_limit:
        return _cache[: int(np.searchsorted(_cache, n, side="right"))]
    if n > CACHE_LIMIT:
        arr = PrimeSieve(n).to_array()
        arr.setflags(write=False)
        return arr
    # grow geometrically so repeated small increases stay cheap
    new_limit = min(max(n, 2 * _cache_limit, 1 << 16), CACHE_LIMIT)
    arr = PrimeSieve(new_limit).to_array()
    arr.setflags(write=False)
    _cache, _cache_limit = arr, new_limit
    return primes_up_to(n)


def stream_primes(limit: int, consumer: Callable[[int], object], *, segment_length: int = DEFAULT_SEGMENT) -> None:
    """Call ``consumer(p)`` once per prime p <= limit, ascending."""
    for seg in PrimeSieve(limit, segment_length).segments():
        for p in seg.tolist():
            consumer(p)


def prime_count(x: int) -> int:
    if x < 2:
        return 0
    check_limit(x)
    if x <= CACHE_LIMIT:
        return len(primes_up_to(x))
    return PrimeSieve(x).count()


def prime_count_ap(x: int, m: int, l: int) -> int:
    """Number of primes p <= x with p = l (mod m)."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if x < 2:
        return 0
    check_limit(x)
    r = l % m
    if x <= CACHE_LIMIT:
        return int(np.count_nonzero(primes_up_to(x) % m == r))
    return sum(int(np.count_nonzero(seg % m == r)) for seg in PrimeSieve(x).segments())


@dataclass(frozen=True)
class CheckpointTable:
    """Exact (x, pi(x)) pairs, strictly ascending in x."""

    entries: tuple[tuple[int, int], ...] = ()

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def points(self) -> list[int]:
        return [x for x, _ in self.entries]

    def merge(self, other: "CheckpointTable | Iterable[tuple[int, int]]") -> "CheckpointTable":
        d = self.as_dict()
        d.update(dict(other))
        return CheckpointTable(tuple(sorted(d.items())))

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write("x,pi\n")
            for x, c in self.entries:
                fh.write(f"{x},{c}\n")

    @classmethod
    def from_csv(cls, path: str | Path) -> "CheckpointTable":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["x", "pi"]:
                raise ValueError(f"{path}: expected header 'x,pi', got {header}")
            rows = [(int(x), int(c)) for x, c in reader if x]
        for (x0, c0), (x1, c1) in zip(rows, rows[1:]):
            if not (x0 < x1 and c0 <= c1):
                raise NotSorted(f"{path}: rows not ascending at x={x1}")
        return cls(tuple(rows))


def prime_count_at(
    points: Sequence[int],
    *,
    resume: tuple[int, int] | None = None,
    on_segment: Callable[[list[tuple[int, int]]], None] | None = None,
    segment_length: int = DEFAULT_SEGMENT,
) -> CheckpointTable:
    """Exact pi(x) at every point, using one sieve pass up to max(points).

    ``resume=(x0, pi(x0))`` restarts the pass just above a known value; all
    points must then exceed x0. ``on_segment`` receives the checkpoints
    completed after each segment (used for incremental cache writes).
    """
    pts = [int(x) for x in points]
    if any(x0 > x1 for x0, x1 in zip(pts, pts[1:])):
        raise NotSorted("points must be ascending")
    if not pts:
        return CheckpointTable()
    hi = pts[-1]
    check_limit(hi)
    pts = sorted(set(pts))
    out: list[tuple[int, int]] = []
    if resume is None:
        start, running = 0, 0
    else:
        x0, running = resume
        if pts[0] <= x0:
            raise ValueError("resume point must lie below every requested point")
        start = x0 + 1
    arr = np.array(pts, dtype=np.int64)
    idx = 0
    # points below the first sieved value
    first = max(start, 2)
    while idx < len(pts) and pts[idx] < first:
        out.append((pts[idx], running))
        idx += 1
    if idx < len(pts):
        if hi <= CACHE_LIMIT and resume is None:
            primes = primes_up_to(hi)
            counts = np.searchsorted(primes, arr[idx:], side="right")
            done = list(zip(pts[idx:], counts.tolist()))
            out.extend(done)
            if on_segment:
                on_segment(done)
        else:
            sieve = PrimeSieve(hi, segment_length, start=start)
            seg_low = start
            for seg in sieve.segments():
                seg_high = int(seg[-1]) if len(seg) else seg_low
                j = int(np.searchsorted(arr, seg_high, side="right"))
                done = []
                if j > idx:
                    c = running + np.searchsorted(seg, arr[idx:j], side="right")
                    done = list(zip(pts[idx:j], c.tolist()))
                    out.extend(done)
                    idx = j
                running += len(seg)
                seg_low = seg_high + 1
                if on_segment and done:
                    on_segment(done)
            if idx < len(pts):
                done = [(x, running) for x in pts[idx:]]
                out.extend(done)
                if on_segment:
                    on_segment(done)
    return CheckpointTable(tuple(out))


# Sinclair's 7-base set: deterministic for every n < 2^64.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 2^64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def omega(n: int) -> int:
    return len(factorize(n))


_FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def primorial(t: int) -> int:
    """Product of the first t primes, 1 <= t <= 15."""
    if not 1 <= t <= len(_FIRST_PRIMES):
        raise IndexOutOfRange(f"primorial index {t} not in [1, 15]")
    return math.prod(_FIRST_PRIMES[:t])


def totient_omega_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """phi(k) and omega(k) for every k in [0, n], by a vectorised sieve."""
    phi = np.arange(n + 1, dtype=np.int64)
    om = np.zeros(n + 1, dtype=np.int64)
    is_p = simple_sieve(n)
    for p in np.flatnonzero(is_p).tolist():
        phi[p::p] -= phi[p::p] // p
        om[p::p] += 1
    return phi, om


def logarithmic_integral(x: float, *, rel_tol: float = 1e-11) -> float:
    """Li(x) = integral of 1/log t over [2, x], by adaptive Simpson."""
    if x < 2:
        raise DomainError(f"Li(x) needs x >= 2, got {x}")
    if x == 2:
        return 0.0
    return adaptive_simpson(lambda t: 1.0 / math.log(t), 2.0, float(x), tol=max(1e-12, rel_tol * x / math.log(x)))


def adaptive_simpson(f: Callable[[float], float], lo: float, hi: float, *, tol: float, max_depth: int = 60, floor: float = 1e-12) -> float:
    def simpson(a, fa, b, fb):
        m = 0.5 * (a + b)
        fm = f(m)
        return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    flo, fhi = f(lo), f(hi)
    mid, fmid, whole = simpson(lo, flo, hi, fhi)
    total = 0.0
    stack = [(lo, flo, hi, fhi, mid, fmid, whole, tol, 0)]
    while stack:
        a, fa, b, fb, m, fm, s, eps, depth = stack.pop()
        lm, flm, left = simpson(a, fa, m, fm)
        rm, frm, right = simpson(m, fm, b, fb)
        delta = left + right - s
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
        else:
            half = max(eps / 2.0, floor)
            stack.append((a, fa, m, fm, lm, flm, left, half, depth + 1))
            stack.append((m, fm, b, fb, rm, frm, right, half, depth + 1))
    return total
