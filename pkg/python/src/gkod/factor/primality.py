"""
Primality testing.

Miller-Rabin with the twelve-prime witness set is deterministic below 2^64.
Above that, 64 further rounds are drawn from a generator seeded with
MR_SEED, so a given n always sees the same bases.
"""

import random
from functools import lru_cache
from typing import Tuple

from ..const import (
    MR_DETERMINISTIC_LIMIT,
    MR_DETERMINISTIC_WITNESSES,
    MR_EXTRA_ROUNDS,
    MR_SEED,
    TRIAL_DIVISION_BOUND,
)


@lru_cache(maxsize=4)
def small_primes(bound: int = TRIAL_DIVISION_BOUND) -> Tuple[int, ...]:
    """All primes <= bound (sieve of Eratosthenes)."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _is_strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in MR_DETERMINISTIC_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_DETERMINISTIC_WITNESSES:
        if not _is_strong_probable_prime(n, a, d, s):
            return False
    if n < MR_DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(MR_SEED)
    for _ in range(MR_EXTRA_ROUNDS):
        if not _is_strong_probable_prime(n, rng.randrange(2, n - 1), d, s):
            return False
    return True
