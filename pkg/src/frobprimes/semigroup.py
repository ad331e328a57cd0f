"""Two-generator numerical semigroups T(a, b) = {a*x + b*y : x, y >= 0}.

Membership is O(1): every residue class k*b (mod a) enters the semigroup
exactly at k*b, so ``n in T`` iff ``n >= k*b`` where ``k = n * b^-1 mod a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import BadOrder, IndexOutOfRange, NotCoprime, Overflow

MAX_PRODUCT = 2**62


@dataclass(frozen=True, order=True)
class CoprimePair:
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if not (2 <= a < b):
            raise BadOrder(f"need 2 <= a < b, got a={a}, b={b}")
        if gcd(a, b) != 1:
            raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
        if a * b > MAX_PRODUCT:
            raise Overflow(f"a*b = {a * b} exceeds 2^62")

    @property
    def frobenius(self) -> int:
        return self.a * self.b - self.a - self.b


def make_pair(a: int, b: int) -> CoprimePair:
    """Validate ``(a, b)``; raises NotCoprime, BadOrder or Overflow."""
    return CoprimePair(int(a), int(b))


def frobenius(pair: CoprimePair) -> int:
    return pair.a * pair.b - pair.a - pair.b


@dataclass(frozen=True)
class SemigroupView:
    pair: CoprimePair
    frobenius: int = field(init=False)
    b_inverse: int = field(init=False)

    def __post_init__(self):
        a, b = self.pair.a, self.pair.b
        object.__setattr__(self, "frobenius", a * b - a - b)
        object.__setattr__(self, "b_inverse", pow(b, -1, a) if a > 1 else 0)

    @classmethod
    def of(cls, a: int, b: int) -> "SemigroupView":
        return cls(make_pair(a, b))

    @property
    def a(self) -> int:
        return self.pair.a

    @property
    def b(self) -> int:
        return self.pair.b

    def class_index(self, n: int) -> int:
        """The unique k in [0, a-1] with n = k*b (mod a)."""
        return (n % self.a) * self.b_inverse % self.a

    def class_min(self, k: int) -> int:
        """Smallest element of T in residue class k*b (mod a)."""
        if not 0 <= k < self.a:
            raise IndexOutOfRange(f"class index {k} not in [0, {self.a - 1}]")
        return k * self.b

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.class_index(n) * self.b

    def enumerate_class(self, k: int) -> list[int]:
        """Elements x*a + k*b of T with 0 < value <= S, ascending."""
        start = self.class_min(k)
        if start == 0:
            start = self.a
        return list(range(start, self.frobenius + 1, self.a))

    def gap_count(self) -> int:
        # T is symmetric on [0, S], so exactly half of the S+1 integers are gaps
        return (self.frobenius + 1) // 2


def view(a: int, b: int) -> SemigroupView:
    return SemigroupView.of(a, b)


def class_index(v: SemigroupView, n: int) -> int:
    return v.class_index(n)


def class_min(v: SemigroupView, k: int) -> int:
    return v.class_min(k)


def contains(v: SemigroupView, n: int) -> bool:
    return v.contains(n)


def enumerate_class(v: SemigroupView, k: int) -> list[int]:
    return v.enumerate_class(k)


def gap_count(v: SemigroupView) -> int:
    return v.gap_count()
