"""Counting primes of the form a*x + b*y below the Frobenius number."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import primes as P
from .errors import DegenerateS, LimitTooLarge, ValidationError
from .semigroup import CoprimePair, SemigroupView

ORACLE_LIMIT = 10**7


@dataclass(frozen=True)
class CountResult:
    a: int
    b: int
    s: int
    pi_ab: int
    pi_s: int

    @property
    def ratio(self) -> float:
        return self.pi_ab / self.pi_s

    @property
    def exact_ratio(self) -> Fraction:
        return Fraction(self.pi_ab, self.pi_s)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ratio"] = self.ratio
        return d


def _primes_to(s: int, primes: np.ndarray | None) -> np.ndarray:
    if primes is None:
        return P.primes_up_to(s)
    return primes[: int(np.searchsorted(primes, s, side="right"))]


def semigroup_prime_mask(pair: CoprimePair, primes: np.ndarray) -> np.ndarray:
    """Boolean mask over ``primes`` selecting members of T(a, b)."""
    v = SemigroupView(pair)
    k = (primes % v.a) * v.b_inverse % v.a
    return primes >= k * v.b


def count_semigroup_primes(pair: CoprimePair, primes: np.ndarray | None = None) -> int:
    """pi(a, b): primes p <= S lying in T(a, b).

    ``primes`` may be any ascending prime array reaching at least S; it is
    sliced, never copied, so one sieve can serve many pairs.
    """
    s = pair.frobenius
    if s < 2:
        return 0
    ps = _primes_to(s, primes)
    return int(np.count_nonzero(semigroup_prime_mask(pair, ps)))


def count_oracle(pair: CoprimePair, is_prime: np.ndarray | None = None) -> int:
    """Brute-force pi(a, b): reachability over [0, S], no threshold rule."""
    from ._kernels import reach_prime_count

    s = pair.frobenius
    if s > ORACLE_LIMIT:
        raise LimitTooLarge(s, ORACLE_LIMIT)
    if is_prime is None:
        is_prime = P.simple_sieve(max(s, 2))
    return int(reach_prime_count(pair.a, pair.b, is_prime))


def ratio_result(pair: CoprimePair, primes: np.ndarray | None = None) -> CountResult:
    s = pair.frobenius
    if s < 2:
        raise DegenerateS(f"S = {s} < 2 for ({pair.a}, {pair.b}); pi(S) = 0")
    ps = _primes_to(s, primes)
    pi_ab = int(np.count_nonzero(semigroup_prime_mask(pair, ps)))
    return CountResult(pair.a, pair.b, s, pi_ab, len(ps))


def gap_prime_count(pair: CoprimePair, window_numerator: int = 7, window_denominator: int = 8,
                    primes: np.ndarray | None = None) -> int:
    """Primes p with (num/den)*S < p <= S that are NOT in T(a, b)."""
    if not 0 < window_numerator < window_denominator:
        raise ValidationError("window fraction must lie in (0, 1)")
    s = pair.frobenius
    if s < 2:
        return 0
    ps = _primes_to(s, primes)
    # first index with p*den > num*S, i.e. p > floor(num*S/den)
    lo = int(np.searchsorted(ps, window_numerator * s // window_denominator, side="right"))
    window = ps[lo:]
    return int(np.count_nonzero(~semigroup_prime_mask(pair, window)))


def box_prime_counts(pair: CoprimePair, x_max: int, y_max: int | None, limit: int, strict: bool) -> tuple[int, int]:
    """(distinct prime values, prime-hitting (x, y) pairs) for a*x + b*y in the box."""
    from ._kernels import box_prime_counts as kernel

    if limit > pair.frobenius:
        raise ValidationError(f"limit {limit} exceeds S = {pair.frobenius}")
    bound = limit if strict else limit + 1
    if bound <= 0 or x_max < 0 or (y_max is not None and y_max < 0):
        return 0, 0
    table = P.prime_table(bound)
    d, n = kernel(pair.a, pair.b, x_max, -1 if y_max is None else y_max, bound, table)
    return int(d), int(n)


def count_box_primes(pair: CoprimePair, x_max: int, y_max: int | None, limit: int, strict: bool = False) -> int:
    """Distinct primes a*x + b*y with x <= x_max, y <= y_max (None = unbounded)
    and value <= limit (< limit when strict)."""
    return box_prime_counts(pair, x_max, y_max, limit, strict)[0]
