"""
Exact order formulas.

|L_n(2)| = 2^C(n,2) * prod_{i=2..n} (2^i - 1) is assembled from the factored
Mersenne numbers, so it never needs a big-integer factorization.
"""

import math
from functools import lru_cache
from typing import Optional

from ..arith.model import Factorization, require_natural
from ..errors import DomainError
from ..factor import FactorCache, factor_mersenne, is_prime, small_primes
from .constants import GroupConstants, default_constants
from .ids import canonical
from .model import Family, GroupId, prime_power


def order_Ln2(n: int, cache: Optional[FactorCache] = None) -> Factorization:
    require_natural(n, "n", minimum=2)
    result = Factorization.from_mapping({2: n * (n - 1) // 2})
    for i in range(2, n + 1):
        result = result * factor_mersenne(i, cache)
    return result


def order_aut_Ln2(n: int, cache: Optional[FactorCache] = None) -> Factorization:
    """|Aut(L_n(2))| = 2|L_n(2)| (graph automorphism), n >= 3."""
    require_natural(n, "n")
    if n < 3:
        raise DomainError(
            "Aut(L_2(2)) = L_2(2) (S_3 has no outer automorphisms); need n >= 3"
        )
    return order_Ln2(n, cache) * Factorization(((2, 1),))


@lru_cache(maxsize=256)
def alternating_order(m: int) -> Factorization:
    """m!/2 via Legendre's formula."""
    require_natural(m, "m", minimum=2)
    counts = {}
    for p in small_primes(m):
        e, pk = 0, p
        while pk <= m:
            e += m // pk
            pk *= p
        counts[p] = e
    counts[2] -= 1
    return Factorization.from_mapping(counts)


def order_simple(
    gid: GroupId,
    cache: Optional[FactorCache] = None,
    constants: Optional[GroupConstants] = None,
) -> Factorization:
    """Order of the simple group named by gid (after canonicalization)."""
    gid = canonical(gid)
    constants = constants or default_constants()
    match gid.family:
        case Family.ALTERNATING:
            return alternating_order(gid.rank)
        case Family.SPORADIC:
            return constants.sporadic[gid.sporadic_name]
        case Family.TITS:
            return constants.tits
    s, f = prime_power(gid.q)
    return constants.lie[gid.family].order_factorization(
        gid.rank, gid.q, s, f, cache
    )


def out_order_Lnq(n: int, q: int) -> int:
    """
    |Out(L_n(q))| = (n, q-1) * f * g with q = s^f, where the graph factor g
    is 2 for n >= 3 and 1 for n = 2.
    """
    require_natural(n, "n", minimum=2)
    canonical(GroupId.linear(n, q))
    _, f = prime_power(q)
    graph = 2 if n >= 3 else 1
    return math.gcd(n, q - 1) * f * graph


def sigma_prime(n: int) -> int:
    """The odd prime p with n in {p, p+1}, trying p = n first."""
    for p in (n, n - 1):
        if p > 2 and is_prime(p):
            return p
    raise DomainError(f"n={n} is neither p nor p+1 for an odd prime p")


def centralizer_sigma_order(n: int) -> Factorization:
    """
    |C_L(sigma)| for the graph involution sigma of L = L_n(2), n in {p, p+1}:

        n = p:    2^(((p-1)/2)^2) * prod_{j=1..(p-1)/2} (2^(2j) - 1)
        n = p+1:  2^(((p+1)/2)^2) * prod_{j=1..(p-1)/2} (2^(2j) - 1)
                  * (2^(p+1) - 1)
    """
    require_natural(n, "n", minimum=3)
    p = sigma_prime(n)
    half = (p - 1) // 2
    power = half**2 if n == p else ((p + 1) // 2) ** 2
    result = Factorization.from_mapping({2: power})
    for j in range(1, half + 1):
        result = result * factor_mersenne(2 * j)
    if n == p + 1:
        result = result * factor_mersenne(p + 1)
    return result
