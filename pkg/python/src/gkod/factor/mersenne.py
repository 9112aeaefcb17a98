"""Lucas-Lehmer testing and the Mersenne exponent sweep."""

import logging
from dataclasses import dataclass
from typing import Tuple

from ..arith.model import require_natural
from ..const import KNOWN_MERSENNE_EXPONENTS
from ..errors import DomainError
from .primality import is_prime, small_primes

logger = logging.getLogger(__name__)


def lucas_lehmer(p: int) -> bool:
    """
    True iff 2^p - 1 is prime, for an odd prime p.

    Runs s <- s^2 - 2 from s = 4, reducing modulo M = 2^p - 1 by folding the
    high bits onto the low bits (x mod M == (x & M) + (x >> p) up to one
    further subtraction).
    """
    require_natural(p, "p")
    if p == 2:
        raise DomainError("p = 2 is outside Lucas-Lehmer; 2^2 - 1 = 3 is prime")
    if not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    mask = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = s * s + mask - 2
        while s > mask:
            s = (s & mask) + (s >> p)
        if s == mask:
            s = 0
    return s == 0


@dataclass(frozen=True)
class MersenneSweep:
    """Exponents found by the sweep against the published list."""

    max_p: int
    found: Tuple[int, ...]
    expected: Tuple[int, ...]

    @property
    def matches(self) -> bool:
        return self.found == self.expected

    @property
    def missing(self) -> Tuple[int, ...]:
        return tuple(p for p in self.expected if p not in self.found)

    @property
    def unexpected(self) -> Tuple[int, ...]:
        return tuple(p for p in self.found if p not in self.expected)


def mersenne_exponents(max_p: int) -> Tuple[int, ...]:
    """Primes p <= max_p with 2^p - 1 prime; p = 2 comes from the table."""
    require_natural(max_p, "max_p")
    found = [2] if max_p >= 2 else []
    for p in small_primes(max(max_p, 2)):
        if p > 2 and lucas_lehmer(p):
            logger.debug(f"2^{p}-1 is prime")
            found.append(p)
    return tuple(found)


def mersenne_sweep(max_p: int) -> MersenneSweep:
    found = mersenne_exponents(max_p)
    expected = tuple(p for p in KNOWN_MERSENNE_EXPONENTS if p <= max_p)
    return MersenneSweep(max_p=max_p, found=found, expected=expected)
