"""
Multiplicative order of 2 and primitive prime divisors of 2^k - 1.

ppd(k) is computed from multiplicative orders, not as a set difference of
prime divisors; the partition law pi(2^k - 1) = disjoint union of ppd(d) over
d | k, d >= 2 is then an independent cross-check.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from ..arith.model import require_natural
from ..errors import DomainError, IntegrityError
from ..factor import FactorCache, divisors, factor, factor_mersenne, is_prime

logger = logging.getLogger(__name__)

# Zsigmondy exceptions for base 2: 2^1 - 1 = 1 and 2^6 - 1 = 3^2 * 7.
ZSIGMONDY_EXCEPTIONS = frozenset({1, 6})


@dataclass(frozen=True)
class PpdSet:
    """Primes p with ord_p(2) = k, ascending."""

    k: int
    primes: Tuple[int, ...]

    def __bool__(self) -> bool:
        return bool(self.primes)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __str__(self) -> str:
        if not self.primes:
            return "{}"
        return "{" + ", ".join(str(p) for p in self.primes) + "}"


@lru_cache(maxsize=4096)
def mult_order_of_2(p: int) -> int:
    """Least k >= 1 with 2^k == 1 (mod p), for an odd prime p."""
    require_natural(p, "p")
    if p == 2 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    return order_of_2_dividing(p, p - 1)


def order_of_2_dividing(p: int, m: int) -> int:
    """ord_p(2) for a prime p dividing 2^m - 1; the order divides m."""
    k = m
    for q, _ in factor(m):
        while k % q == 0 and pow(2, k // q, p) == 1:
            k //= q
    return k


def pi_of_mersenne(
    k: int, cache: Optional[FactorCache] = None
) -> Tuple[int, ...]:
    """All prime divisors of 2^k - 1, ascending; k >= 2."""
    require_natural(k, "k", minimum=2)
    return factor_mersenne(k, cache).primes()


def ppd_set(k: int, cache: Optional[FactorCache] = None) -> PpdSet:
    """Primitive prime divisors of 2^k - 1."""
    require_natural(k, "k", minimum=1)
    if k == 1:
        return PpdSet(k=1, primes=())
    primes = tuple(
        p
        for p in factor_mersenne(k, cache).primes()
        if order_of_2_dividing(p, k) == k
    )
    if not primes and k not in ZSIGMONDY_EXCEPTIONS:
        raise IntegrityError(f"2^{k}-1 has no primitive prime divisor")
    logger.debug(f"ppd(2^{k}-1) = {primes}")
    return PpdSet(k=k, primes=primes)


def ppd_partition(
    k: int, cache: Optional[FactorCache] = None
) -> Dict[int, PpdSet]:
    """ppd(d) for every divisor d >= 2 of k."""
    require_natural(k, "k", minimum=2)
    return {d: ppd_set(d, cache) for d in divisors(k) if d >= 2}


def partition_law_holds(k: int, cache: Optional[FactorCache] = None) -> bool:
    """pi(2^k - 1) is the disjoint union of ppd(d), d | k, d >= 2."""
    parts = ppd_partition(k, cache).values()
    union = [p for part in parts for p in part]
    return len(union) == len(set(union)) and sorted(union) == list(
        pi_of_mersenne(k, cache)
    )
