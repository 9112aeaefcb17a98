"""
Integer factorization.

Generic path: trial division by the primes below TRIAL_DIVISION_BOUND, then
Pollard-Brent on whatever composite cofactor is left. Numbers of the form
2^k - 1 are first split algebraically into the cyclotomic values Phi_d(2),
d | k, and a factor cache (when given) supplies the primes of known entries.
"""

import logging
import math
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Tuple

from ..arith.model import Factorization, require_natural
from ..const import RHO_ITERATION_BUDGET, RHO_MAX_RESTARTS
from ..errors import IncompleteFactorizationError, IntegrityError
from .primality import is_prime, small_primes
from .rho import brent_split

if TYPE_CHECKING:
    from .cache import FactorCache

logger = logging.getLogger(__name__)


def mersenne_exponent(n: int) -> Optional[int]:
    """k when n == 2^k - 1 with k >= 2, else None."""
    if n >= 3 and (n + 1) & n == 0:
        return n.bit_length()
    return None


def verify_factorization(f: Factorization, n: int) -> None:
    """Raise IntegrityError unless f reconstructs n from primes only."""
    if f.value() != n:
        raise IntegrityError(f"{f} does not reconstruct {n}")
    for p in f.primes():
        if not is_prime(p):
            raise IntegrityError(f"{p} in {f} is not prime")


def _split(m: int, budget: int) -> int:
    root = math.isqrt(m)
    if root * root == m:
        return root
    for c in range(1, RHO_MAX_RESTARTS + 1):
        d = brent_split(m, c, budget)
        if d:
            logger.debug(f"rho split {m} with c={c}: {d}")
            return d
    raise IncompleteFactorizationError(composite=m, budget=budget)


def _factor_counts(
    n: int, hints: Iterable[int] = (), budget: int = RHO_ITERATION_BUDGET
) -> Dict[int, int]:
    counts: Dict[int, int] = {}

    def take(p: int) -> None:
        nonlocal n
        while n % p == 0:
            n //= p
            counts[p] = counts.get(p, 0) + 1

    for p in sorted(set(hints)):
        take(p)

    if n > 1 and not is_prime(n):
        for p in small_primes():
            if p * p > n:
                break
            if n % p == 0:
                take(p)
                if n == 1 or is_prime(n):
                    break

    stack: List[int] = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _split(m, budget)
        stack.extend((d, m // d))
    return counts


@lru_cache(maxsize=8192)
def _factor_plain(n: int) -> Factorization:
    return Factorization.from_mapping(_factor_counts(n))


def divisors(n: int) -> Tuple[int, ...]:
    """Ascending positive divisors of n >= 1."""
    require_natural(n, "n", minimum=1)
    result = [1]
    for p, e in _factor_plain(n):
        result = [d * p**i for d in result for i in range(e + 1)]
    return tuple(sorted(result))


def mobius(n: int) -> int:
    require_natural(n, "n", minimum=1)
    f = _factor_plain(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def cyclotomic_value(d: int) -> int:
    """Phi_d(2), from the Mobius product over the divisors of d."""
    require_natural(d, "d", minimum=1)
    num, den = 1, 1
    for e in divisors(d):
        mu = mobius(d // e)
        if mu == 1:
            num *= (1 << e) - 1
        elif mu == -1:
            den *= (1 << e) - 1
    return num // den


def factor_mersenne(
    k: int,
    cache: Optional["FactorCache"] = None,
    budget: int = RHO_ITERATION_BUDGET,
) -> Factorization:
    """Factorization of 2^k - 1."""
    require_natural(k, "k", minimum=1)
    if cache is not None and k in cache:
        logger.debug(f"factor cache hit for 2^{k}-1")
        return cache[k]
    counts: Dict[int, int] = {}
    for d in divisors(k):
        if d == 1:
            continue
        phi = cyclotomic_value(d)
        hints = cache.primes_of_multiples(d) if cache is not None else ()
        for p, e in _factor_counts(phi, hints, budget).items():
            counts[p] = counts.get(p, 0) + e
    result = Factorization.from_mapping(counts)
    verify_factorization(result, (1 << k) - 1)
    return result


def factor(
    n: int,
    cache: Optional["FactorCache"] = None,
    budget: int = RHO_ITERATION_BUDGET,
) -> Factorization:
    """
    Complete prime factorization of n >= 1.

    Raises IncompleteFactorizationError naming the composite that Pollard-Brent
    could not split within `budget` iterations per restart.
    """
    require_natural(n, "n", minimum=1)
    k = mersenne_exponent(n)
    if k is not None:
        return factor_mersenne(k, cache, budget)
    if budget == RHO_ITERATION_BUDGET:
        return _factor_plain(n)
    return Factorization.from_mapping(_factor_counts(n, budget=budget))
