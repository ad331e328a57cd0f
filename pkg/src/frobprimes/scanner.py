"""Sweeps of pi(a, b) / pi(S) over rectangles of coprime pairs."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import primes as P
from .census import CountResult, count_semigroup_primes, ratio_result
from .errors import LimitTooLarge, NotCoprime
from .reporting import dumps, fmt_real
from .semigroup import CoprimePair, make_pair

ScanRow = CountResult

WINDOW_LOW = Fraction(13, 66)
WINDOW_HIGH = Fraction(1, 2)


def in_window(row: ScanRow) -> bool:
    """13/66 <= pi_ab/pi_s <= 1/2, compared in integers."""
    return 13 * row.pi_s <= 66 * row.pi_ab and 2 * row.pi_ab <= row.pi_s


@dataclass
class ScanSummary:
    a_min: int
    a_max: int
    b_max: int
    pairs_scanned: int = 0
    min_ratio: Fraction | None = None
    min_witnesses: list[tuple[int, int]] = field(default_factory=list)
    max_ratio: Fraction | None = None
    max_witnesses: list[tuple[int, int]] = field(default_factory=list)
    violations: list[tuple[int, int]] = field(default_factory=list)

    def add(self, row: ScanRow) -> None:
        r = row.exact_ratio
        ab = (row.a, row.b)
        self.pairs_scanned += 1
        if self.min_ratio is None or r < self.min_ratio:
            self.min_ratio, self.min_witnesses = r, [ab]
        elif r == self.min_ratio:
            self.min_witnesses.append(ab)
        if self.max_ratio is None or r > self.max_ratio:
            self.max_ratio, self.max_witnesses = r, [ab]
        elif r == self.max_ratio:
            self.max_witnesses.append(ab)
        if not in_window(row):
            self.violations.append(ab)

    def as_dict(self) -> dict:
        def frac(f):
            return None if f is None else f"{f.numerator}/{f.denominator}"

        return {
            "summary": True,
            "a_min": self.a_min,
            "a_max": self.a_max,
            "b_max": self.b_max,
            "pairs_scanned": self.pairs_scanned,
            "min_ratio": None if self.min_ratio is None else float(self.min_ratio),
            "min_ratio_exact": frac(self.min_ratio),
            "min_witnesses": [list(w) for w in self.min_witnesses],
            "max_ratio": None if self.max_ratio is None else float(self.max_ratio),
            "max_ratio_exact": frac(self.max_ratio),
            "max_witnesses": [list(w) for w in self.max_witnesses],
            "violations": [list(w) for w in self.violations],
        }


def _block(a: int, b_max: int, primes: np.ndarray | None = None) -> list[ScanRow]:
    if primes is None:
        primes = P.primes_up_to(max(a * b_max - a - b_max, 2))
    return [ratio_result(CoprimePair(a, b), primes) for b in range(a + 1, b_max + 1) if math.gcd(a, b) == 1]


def _block_worker(args) -> list[ScanRow]:
    a, b_max, ceiling = args
    P.set_ceiling(ceiling)
    return _block(a, b_max)


def scan(a_min: int, a_max: int, b_max: int, row_sink: Callable[[ScanRow], object] | None = None,
         workers: int = 1) -> ScanSummary:
    """Visit every coprime (a, b) with a_min <= a <= a_max, a < b <= b_max.

    Rows reach ``row_sink`` in lexicographic (a, b) order for any worker count.
    """
    if not 3 <= a_min <= a_max:
        raise ValueError(f"need 3 <= a_min <= a_max, got {a_min}, {a_max}")
    summary = ScanSummary(a_min, a_max, b_max)
    a_hi = min(a_max, b_max - 1)
    if a_hi < a_min:
        return summary
    s_max = max(a * b_max - a - b_max for a in (a_min, a_hi))
    P.check_limit(s_max)
    primes = P.primes_up_to(s_max)
    a_values = range(a_min, a_hi + 1)
    if workers != 1:
        n = workers if workers > 0 else None
        with ProcessPoolExecutor(n) as pool:
            blocks: Iterable[list[ScanRow]] = pool.map(_block_worker, [(a, b_max, P.get_ceiling()) for a in a_values])
            for rows in blocks:
                for row in rows:
                    summary.add(row)
                    if row_sink:
                        row_sink(row)
    else:
        for a in a_values:
            for row in _block(a, b_max, primes):
                summary.add(row)
                if row_sink:
                    row_sink(row)
    return summary


def predicted_ratio(a: int) -> float:
    """Limit of pi(a, b)/pi(S) as b grows with a fixed."""
    return 0.5 - 1.0 / (2 * (a - 1))


def trend(a: int, b_values: Sequence[int]) -> list[tuple[int, float, float]]:
    """(b, ratio, predicted limit) for each b; raises NotCoprime on a bad b."""
    pairs = []
    for b in b_values:
        if math.gcd(a, b) != 1:
            raise NotCoprime(f"gcd({a}, {b}) = {math.gcd(a, b)}")
        pairs.append(make_pair(a, b))
    if not pairs:
        return []
    primes = P.primes_up_to(max(p.frobenius for p in pairs))
    pred = predicted_ratio(a)
    return [(p.b, ratio_result(p, primes).ratio, pred) for p in pairs]


def trend_deviation(a: int = 3, decades: Iterable[int] = (3, 4, 5)) -> list[tuple[int, float]]:
    """Mean |ratio - limit| over b in (10^k, 2*10^k] coprime to a, per decade k."""
    out = []
    pred = predicted_ratio(a)
    for k in decades:
        lo, hi = 10**k, 2 * 10**k
        primes = P.primes_up_to(a * hi - a - hi)
        devs = [abs(ratio_result(CoprimePair(a, b), primes).ratio - pred)
                for b in range(lo + 1, hi + 1) if math.gcd(a, b) == 1]
        out.append((k, sum(devs) / len(devs)))
    return out


def classwise_terms(pair: CoprimePair, primes: np.ndarray | None = None) -> tuple[int, dict[int, int]]:
    """([a is a prime <= S], {k: #{p = k*b mod a, k*b <= p <= S}} over 1 <= k < a with gcd(k, a) = 1)."""
    from ._kernels import class_counts

    s = pair.frobenius
    if s > 10**7:
        raise LimitTooLarge(s, 10**7)
    ps = P.primes_up_to(max(s, 2)) if primes is None else primes
    ps = ps[: int(np.searchsorted(ps, s, side="right"))]
    counts = class_counts(pair.a, pair.b, ps)
    terms = {k: int(counts[k]) for k in range(1, pair.a) if math.gcd(k, pair.a) == 1}
    return int(pair.a <= s and P.is_prime(pair.a)), terms


def classwise_count_identity(pair: CoprimePair, primes: np.ndarray | None = None) -> bool:
    """pi(a, b) == [a prime] + sum of the coprime residue-class counts above k*b."""
    head, terms = classwise_terms(pair, primes)
    return count_semigroup_primes(pair, primes) == head + sum(terms.values())


CSV_HEADER = "a,b,s,pi_ab,pi_s,ratio"


def csv_line(row: ScanRow) -> str:
    return f"{row.a},{row.b},{row.s},{row.pi_ab},{row.pi_s},{fmt_real(row.ratio)}"


def json_row(row: ScanRow) -> str:
    return dumps(row.as_dict())
