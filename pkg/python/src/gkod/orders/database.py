"""
Enumeration of the simple groups whose order divides a given natural.

The search is finite and exhaustive:

- alternating degrees m stop below the smallest prime not dividing the target,
  since m! contains every prime <= m;
- for a Lie family over q = s^f, q^N divides |S|, so f * N(rank) is bounded by
  the exponent of s in the target, and N grows with the rank;
- sporadic groups and the Tits group are checked one by one.

Every candidate is canonicalized before it is kept, so isomorphic aliases
(B_3(2) and C_3(2), A_2(2) and A_1(7), ...) produce a single entry.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Set

from ..arith.model import Factorization
from ..errors import DomainError
from ..factor import FactorCache, small_primes
from .constants import GroupConstants, LieFamilyData, default_constants
from .formulas import alternating_order, order_simple
from .ids import canonical
from .model import GroupId, GroupOrderEntry

logger = logging.getLogger(__name__)

SMALLEST_SIMPLE_ORDER = 60


def smallest_absent_prime(target: Factorization) -> int:
    present = set(target.primes())
    for p in small_primes(10**4):
        if p not in present:
            return p
    raise DomainError(f"{target} has too many small prime divisors")


def _alternating(target: Factorization) -> Iterator[GroupId]:
    bound = smallest_absent_prime(target)
    for m in range(5, bound):
        if alternating_order(m).divides(target):
            yield GroupId.alternating(m)


def _ranks(fam: LieFamilyData, f: int, e: int) -> Iterator[int]:
    if fam.fixed_rank is not None:
        if f * fam.q_exponent(fam.fixed_rank) <= e:
            yield fam.fixed_rank
        return
    rank = fam.min_rank
    while f * fam.q_exponent(rank) <= e:
        yield rank
        rank += 1


def _lie(fam: LieFamilyData, target: Factorization) -> Iterator[GroupId]:
    """Parameters of `fam` whose order value divides the target."""
    n = target.value()
    lowest = fam.q_exponent(fam.fixed_rank or fam.min_rank)
    for s, e in target:
        f = 1
        while f * lowest <= e:
            if fam.allows_field(s, f):
                q = s**f
                for rank in _ranks(fam, f, e):
                    if n % fam.order_value(rank, q) == 0:
                        yield GroupId(fam.family, rank=rank, q=q)
            f += 1


def _candidates(
    target: Factorization, constants: GroupConstants
) -> Iterator[GroupId]:
    yield from _alternating(target)
    for fam in constants.families():
        yield from _lie(fam, target)
    for name in constants.sporadic:
        yield GroupId.sporadic(name)
    yield GroupId.tits()


def db_enumerate_dividing(
    target: Factorization,
    required_primes: Iterable[int] = (),
    cache: Optional[FactorCache] = None,
    constants: Optional[GroupConstants] = None,
) -> List[GroupOrderEntry]:
    """
    All simple groups S with |S| dividing `target` and pi(S) containing
    `required_primes`, sorted by (order, name).
    """
    constants = constants or default_constants()
    required = set(required_primes)
    if target.value() < SMALLEST_SIMPLE_ORDER:
        return []

    seen: Set[GroupId] = set()
    entries: List[GroupOrderEntry] = []
    for gid in _candidates(target, constants):
        try:
            gid = canonical(gid)
        except DomainError as e:
            logger.debug(f"skipping {gid.lie_name}: {e}")
            continue
        if gid in seen:
            continue
        seen.add(gid)
        order = order_simple(gid, cache, constants)
        if not order.divides(target):
            continue
        if not required <= set(order.primes()):
            continue
        entries.append(GroupOrderEntry(id=gid, order=order))

    entries.sort(key=GroupOrderEntry.sort_key)
    logger.debug(f"{len(entries)} simple groups have order dividing {target}")
    return entries
