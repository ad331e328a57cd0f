"""Primes of the form ax + by below the Frobenius number of two coprime generators."""

from .census import CountResult, count_box_primes, count_oracle, count_semigroup_primes, gap_prime_count, ratio_result
from .errors import (BadOrder, DegenerateS, DomainError, FrobPrimesError, IndexOutOfRange, LimitTooLarge, NotCoprime,
                     NotSorted, Overflow, ValidationError)
from .primes import (CheckpointTable, PrimeSieve, euler_phi, is_prime, logarithmic_integral, omega, prime_count,
                     prime_count_ap, prime_count_at, primorial, stream_primes)
from .semigroup import CoprimePair, SemigroupView, frobenius, make_pair

__version__ = "0.1.0"
