"""
Exact integer operations: p-parts, valuations and the p-part identity
(q^m - 1)_p = m_p * (q - 1)_p for odd p dividing q - 1.
"""

import math
from dataclasses import dataclass

from ..errors import DomainError, PreconditionError
from ..factor.primality import is_prime
from .model import require_natural


@dataclass(frozen=True)
class PPartIdentity:
    """Both sides of the p-part identity and whether they agree."""

    lhs: int
    rhs: int
    equal: bool


def _require_prime(p: int, name: str = "p") -> int:
    require_natural(p, name)
    if not is_prime(p):
        raise DomainError(f"{name} must be prime, got {p}")
    return p


def valuation(n: int, p: int) -> int:
    """Exponent of the largest power of prime p dividing n >= 1."""
    require_natural(n, "n", minimum=1)
    _require_prime(p)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n: int, p: int) -> int:
    """The largest power of prime p dividing n >= 1."""
    return p ** valuation(n, p)


def verify_p_part_identity(q: int, m: int, p: int) -> PPartIdentity:
    """Evaluate (q^m - 1)_p against m_p * (q - 1)_p."""
    require_natural(q, "q", minimum=2)
    require_natural(m, "m", minimum=1)
    _require_prime(p)
    if p == 2:
        raise DomainError("the p-part identity needs an odd prime p")
    if (q - 1) % p:
        raise PreconditionError(f"{p} does not divide q - 1 = {q - 1}")
    lhs = p_part(q**m - 1, p)
    rhs = p_part(m, p) * p_part(q - 1, p)
    return PPartIdentity(lhs=lhs, rhs=rhs, equal=lhs == rhs)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    require_natural(base, "base")
    require_natural(exp, "exp")
    require_natural(modulus, "modulus", minimum=2)
    return pow(base, exp, modulus)


def gcd(a: int, b: int) -> int:
    require_natural(a, "a")
    require_natural(b, "b")
    return math.gcd(a, b)
