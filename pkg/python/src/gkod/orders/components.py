"""
Order components of L_n(2) and of Aut(L_n(2)).

The prime graph of L_n(2) is disconnected only for n <= 4 and for n = p or
p + 1 with p prime; in the latter case the second component is pi(2^p - 1).
"""

import logging
from typing import Iterable, Optional

from ..arith.model import Factorization, require_natural
from ..errors import DomainError, IntegrityError
from ..factor import FactorCache, factor_mersenne, is_prime, lucas_lehmer
from .formulas import order_aut_Ln2, order_Ln2, sigma_prime
from .model import OrderComponent, OrderComponents

logger = logging.getLogger(__name__)

# Prime sets of the components for the small cases, 2's component first.
_SMALL_COMPONENTS = {
    2: ((2,), (3,)),
    3: ((2,), (3,), (7,)),
    4: ((2, 3, 5), (7,)),
}


def _isolated_prime(n: int) -> Optional[int]:
    """The prime p >= 5 with n in {p, p+1}, if any."""
    for p in (n, n - 1):
        if p >= 5 and is_prime(p):
            return p
    return None


def _split(
    order: Factorization, groups: Iterable[Iterable[int]]
) -> OrderComponents:
    components = [
        OrderComponent(primes=tuple(sorted(g)), part=order.restrict(g))
        for g in groups
    ]
    components.sort(key=lambda c: (2 not in c.primes, c.primes[0]))
    return OrderComponents(s=len(components), components=tuple(components))


def s_and_components(
    n: int, cache: Optional[FactorCache] = None
) -> OrderComponents:
    """Number of prime-graph components of L_n(2) and its order components."""
    require_natural(n, "n", minimum=2)
    order = order_Ln2(n, cache)
    if n in _SMALL_COMPONENTS:
        return _split(order, _SMALL_COMPONENTS[n])

    p = _isolated_prime(n)
    if p is None:
        return _split(order, [order.primes()])
    isolated = set(factor_mersenne(p, cache).primes())
    rest = [q for q in order.primes() if q not in isolated]
    result = _split(order, [rest, isolated])
    logger.debug(f"L_{n}(2): s={result.s}, pi_2={sorted(isolated)}")
    return result


def oc_aut_m1(
    n: int, p: int, cache: Optional[FactorCache] = None
) -> Factorization:
    """
    Closed form of the first order component of Aut(L_n(2)):

        n = p:    2^(C(p,2)+1) * prod_{i=2..p-1} (2^i - 1)
        n = p+1:  2^(C(p+1,2)+1) * prod_{i=2..p-1} (2^i - 1) * (2^(p+1) - 1)
    """
    result = Factorization.from_mapping({2: n * (n - 1) // 2 + 1})
    for i in range(2, p):
        result = result * factor_mersenne(i, cache)
    if n == p + 1:
        result = result * factor_mersenne(p + 1, cache)
    return result


def oc_aut(n: int, cache: Optional[FactorCache] = None) -> OrderComponents:
    """
    Order components {m_1, m_2} of Aut(L_n(2)) for n in {p, p+1} with
    2^p - 1 a Mersenne prime; m_2 = 2^p - 1.
    """
    require_natural(n, "n", minimum=3)
    p = sigma_prime(n)
    if not lucas_lehmer(p):
        raise DomainError(f"2^{p}-1 is composite; Aut(L_{n}(2)) has s = 1")
    m2 = Factorization(((2**p - 1, 1),))
    m1 = order_aut_Ln2(n, cache).divide(m2)
    if m1 != oc_aut_m1(n, p, cache):
        raise IntegrityError(
            f"m_1 of Aut(L_{n}(2)) disagrees with its closed form: {m1}"
        )
    return OrderComponents(
        s=2,
        components=(
            OrderComponent(primes=m1.primes(), part=m1),
            OrderComponent(primes=m2.primes(), part=m2),
        ),
    )

