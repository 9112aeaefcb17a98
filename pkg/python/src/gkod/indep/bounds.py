"""
Bounds from degree sequences: the Caro-Wei lower bound on the independence
number and degree-sequence majorization.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from ..errors import DomainError

Number = Union[int, Fraction]


@dataclass(frozen=True)
class BoundValue:
    """An exact non-negative rational in lowest terms."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator < 1:
            raise DomainError(f"denominator must be >= 1: {self.denominator}")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise DomainError(
                f"{self.numerator}/{self.denominator} is not in lowest terms"
            )

    @classmethod
    def of(cls, value: Number) -> "BoundValue":
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def ceil(self) -> int:
        return -(-self.numerator // self.denominator)

    def within(self, lo: Number, hi: Number) -> bool:
        """Closed-interval membership, exactly."""
        return Fraction(lo) <= self.as_fraction() <= Fraction(hi)

    def __le__(self, other: Number) -> bool:
        return self.as_fraction() <= Fraction(other)

    def __float__(self) -> float:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


def caro_wei(d: Sequence[int]) -> BoundValue:
    """Sum of 1 / (1 + deg(v)) over all vertices."""
    return BoundValue.of(sum((Fraction(1, 1 + deg) for deg in d), Fraction(0)))


def t_lower_bound(d: Sequence[int]) -> int:
    """The least integer not below the Caro-Wei value."""
    return caro_wei(d).ceil()


def majorized(d1: Sequence[int], d2: Sequence[int]) -> bool:
    """True iff sorted(d1, reverse) <= sorted(d2, reverse) entrywise."""
    if len(d1) != len(d2):
        raise DomainError(f"lengths differ: {len(d1)} vs {len(d2)}")
    return all(
        a <= b
        for a, b in zip(sorted(d1, reverse=True), sorted(d2, reverse=True))
    )
