"""
Group identifiers, order entries and order components.

A GroupId names a finite simple group symbolically: a family from the
classification, a Lie rank (degree for alternating groups) and a field size.
"""

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from ..arith.model import Factorization
from ..errors import DomainError
from ..factor import factor


class Family(enum.StrEnum):
    """Families of finite simple groups, in Lie notation."""

    ALTERNATING = "Alt"
    SPORADIC = "Spor"
    A = "A"
    TWISTED_A = "2A"
    B = "B"
    C = "C"
    D = "D"
    TWISTED_D = "2D"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    TWISTED_E6 = "2E6"
    E7 = "E7"
    E8 = "E8"
    TRIALITY_D4 = "3D4"
    SUZUKI = "2B2"
    REE_G2 = "2G2"
    REE_F4 = "2F4"
    TITS = "Tits"

    @property
    def is_lie(self) -> bool:
        return self not in (Family.ALTERNATING, Family.SPORADIC, Family.TITS)


# Families whose rank is fixed by the root system.
FIXED_RANK = {
    Family.G2: 2,
    Family.F4: 4,
    Family.E6: 6,
    Family.TWISTED_E6: 6,
    Family.E7: 7,
    Family.E8: 8,
    Family.TRIALITY_D4: 4,
    Family.SUZUKI: 2,
    Family.REE_G2: 2,
    Family.REE_F4: 4,
}

_EXCEPTIONAL_NAMES = {
    Family.G2: "G_2",
    Family.F4: "F_4",
    Family.E6: "E_6",
    Family.TWISTED_E6: "2E_6",
    Family.E7: "E_7",
    Family.E8: "E_8",
    Family.TRIALITY_D4: "3D_4",
    Family.SUZUKI: "2B_2",
    Family.REE_G2: "2G_2",
    Family.REE_F4: "2F_4",
}


def prime_power(q: int) -> Tuple[int, int]:
    """(s, f) with q = s^f and s prime; DomainError otherwise."""
    if q < 2:
        raise DomainError(f"field size must be a prime power, got {q}")
    f = factor(q)
    if len(f) != 1:
        raise DomainError(f"field size must be a prime power, got {q}")
    return f.factors[0]


@dataclass(frozen=True)
class GroupId:
    """
    Symbolic simple-group identifier.

    `rank` is the Lie rank for groups of Lie type and the degree m for
    alternating groups; sporadic groups and the Tits group carry only a name.
    Use `orders.ids.canonical` to fold exceptional isomorphisms.
    """

    family: Family
    rank: Optional[int] = None
    q: Optional[int] = None
    sporadic_name: Optional[str] = field(default=None)

    @classmethod
    def alternating(cls, m: int) -> "GroupId":
        return cls(Family.ALTERNATING, rank=m)

    @classmethod
    def sporadic(cls, name: str) -> "GroupId":
        return cls(Family.SPORADIC, sporadic_name=name)

    @classmethod
    def tits(cls) -> "GroupId":
        return cls(Family.TITS)

    @classmethod
    def lie(cls, family: Family, rank: int, q: int) -> "GroupId":
        family = Family(family)
        if family in FIXED_RANK and rank != FIXED_RANK[family]:
            raise DomainError(f"{family} has rank {FIXED_RANK[family]}")
        return cls(family, rank=rank, q=q)

    @classmethod
    def linear(cls, n: int, q: int) -> "GroupId":
        """L_n(q) = A_{n-1}(q)."""
        return cls(Family.A, rank=n - 1, q=q)

    @property
    def lie_name(self) -> str:
        """Lie notation, e.g. ``A_1(49)`` or ``2A_4(2)``."""
        if not self.family.is_lie:
            return self.name
        if self.family in _EXCEPTIONAL_NAMES:
            return f"{_EXCEPTIONAL_NAMES[self.family]}({self.q})"
        return f"{self.family}_{self.rank}({self.q})"

    @property
    def name(self) -> str:
        """Classical name, e.g. ``L_10(2)``, ``O_8^+(2)``, ``Alt_5``."""
        r, q = self.rank, self.q
        match self.family:
            case Family.ALTERNATING:
                return f"Alt_{r}"
            case Family.SPORADIC:
                return self.sporadic_name
            case Family.TITS:
                return "2F_4(2)'"
            case Family.A:
                return f"L_{r + 1}({q})"
            case Family.TWISTED_A:
                return f"U_{r + 1}({q})"
            case Family.B:
                return f"O_{2 * r + 1}({q})"
            case Family.C:
                return f"S_{2 * r}({q})"
            case Family.D:
                return f"O_{2 * r}^+({q})"
            case Family.TWISTED_D:
                return f"O_{2 * r}^-({q})"
            case _:
                return f"{_EXCEPTIONAL_NAMES[self.family]}({q})"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class GroupOrderEntry:
    """A group with its exact factored order."""

    id: GroupId
    order: Factorization

    @property
    def name(self) -> str:
        return self.id.name

    def sort_key(self) -> Tuple[int, str]:
        return (self.order.value(), self.id.name)


@dataclass(frozen=True)
class OrderComponent:
    """One connected component's primes and its order component m_i."""

    primes: Tuple[int, ...]
    part: Factorization

    @property
    def m(self) -> int:
        return self.part.value()


@dataclass(frozen=True)
class OrderComponents:
    """The prime graph's components with the matching factors of |G|."""

    s: int
    components: Tuple[OrderComponent, ...]

    def __post_init__(self):
        if not 1 <= self.s <= 6 or self.s != len(self.components):
            raise DomainError(
                f"s={self.s} does not match {len(self.components)} components"
            )
        seen = set()
        for c in self.components:
            if set(c.primes) & seen:
                raise DomainError("component prime sets must be disjoint")
            if tuple(c.primes) != c.part.primes():
                raise DomainError(f"primes {c.primes} differ from {c.part}")
            seen.update(c.primes)

    def order(self) -> Factorization:
        result = Factorization()
        for c in self.components:
            result = result * c.part
        return result

    def m_values(self) -> Tuple[int, ...]:
        return tuple(c.m for c in self.components)
