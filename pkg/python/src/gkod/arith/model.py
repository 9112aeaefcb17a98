"""
Exact factorization model.

Naturals are plain Python ints (arbitrary precision, value equality). A
Factorization is the immutable prime decomposition that every other module
passes around: group orders, Mersenne numbers, order components.
"""

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from ..errors import DomainError

MIDDLE_DOT = "·"

_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def require_natural(value: int, name: str = "n", minimum: int = 0) -> int:
    """Reject anything that is not an int >= minimum."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Factorization:
    """
    Prime decomposition of a positive integer.

    `factors` holds (prime, exponent) pairs in strictly ascending prime order
    with exponents >= 1; the empty tuple represents 1. Primality of the listed
    primes is guaranteed by whoever builds the value (module `factor`
    verifies every decomposition it returns or loads).
    """

    factors: Tuple[Tuple[int, int], ...] = field(
        default=(),
        metadata={"doc": "Ascending (prime, exponent) pairs"},
    )

    def __post_init__(self):
        previous = 1
        for p, e in self.factors:
            if not isinstance(p, int) or not isinstance(e, int):
                raise DomainError(f"non-integer factor ({p!r}, {e!r})")
            if p <= previous:
                raise DomainError(
                    f"primes must ascend strictly from 2: {self.factors}"
                )
            if e < 1:
                raise DomainError(f"exponent of {p} must be >= 1, got {e}")
            previous = p

    @classmethod
    def from_mapping(cls, data: Mapping[int, int]) -> "Factorization":
        """Build from a {prime: exponent} mapping, dropping zero exponents."""
        return cls(tuple(sorted((p, e) for p, e in data.items() if e)))

    @classmethod
    def from_primes(cls, primes: Iterable[int]) -> "Factorization":
        """Build from a list of primes with repetition, in any order."""
        counts: Dict[int, int] = {}
        for p in primes:
            counts[p] = counts.get(p, 0) + 1
        return cls.from_mapping(counts)

    @classmethod
    def parse(cls, text: str) -> "Factorization":
        """
        Parse the printed notation, e.g. ``2^10·3^2·5·7·31``.

        Terms may be separated by ``·``, ``*`` or whitespace; ``1`` is the
        empty product. Repeated primes are accumulated.
        """
        cleaned = text.strip()
        if cleaned in ("", "1"):
            return cls()
        counts: Dict[int, int] = {}
        for term in re.split(r"[·*\s]+", cleaned):
            if not term:
                continue
            match = _TERM.match(term)
            if not match:
                raise DomainError(f"cannot parse factor term {term!r}")
            p = int(match.group(1))
            e = int(match.group(2) or 1)
            counts[p] = counts.get(p, 0) + e
        return cls.from_mapping(counts)

    def value(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, 1)

    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for prime, e in self.factors:
            if prime == p:
                return e
        return 0

    def p_part(self, p: int) -> int:
        return p ** self.exponent(p)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __mul__(self, other: "Factorization") -> "Factorization":
        counts = self.as_dict()
        for p, e in other.factors:
            counts[p] = counts.get(p, 0) + e
        return Factorization.from_mapping(counts)

    def __pow__(self, k: int) -> "Factorization":
        require_natural(k, "power")
        return Factorization(tuple((p, e * k) for p, e in self.factors if k))

    def divides(self, other: "Factorization") -> bool:
        return all(other.exponent(p) >= e for p, e in self.factors)

    def divide(self, other: "Factorization") -> "Factorization":
        """Exact quotient self / other; other must divide self."""
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        counts = self.as_dict()
        for p, e in other.factors:
            counts[p] -= e
        return Factorization.from_mapping(counts)

    def restrict(self, primes: Iterable[int]) -> "Factorization":
        """The part of this factorization supported on `primes`."""
        keep = set(primes)
        return Factorization(tuple(pe for pe in self.factors if pe[0] in keep))

    def cache_terms(self) -> str:
        """Terms in factor-cache syntax: ``23^1 89^1``."""
        return " ".join(f"{p}^{e}" for p, e in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return MIDDLE_DOT.join(
            str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors
        )
