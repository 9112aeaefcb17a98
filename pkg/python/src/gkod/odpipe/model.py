"""
Signatures and reports of the OD verification pipeline.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..arith.model import Factorization
from ..errors import DomainError
from ..gkgraph.model import DegreePattern
from ..orders.model import GroupId, GroupOrderEntry

UNIQUE_VERDICT = "candidate filter uniquely resolves to {}"

# Key order of the structured report.
REPORT_KEYS = (
    "target",
    "order",
    "pattern",
    "required_primes",
    "candidates",
    "checks",
    "verdict",
)


@dataclass(frozen=True)
class OdSignature:
    """The pair (|G|, D(G))."""

    order: Factorization
    pattern: DegreePattern

    def __post_init__(self):
        primes = self.order.primes()
        if len(self.pattern) != len(primes):
            raise DomainError(
                f"pattern {self.pattern} has {len(self.pattern)} entries for "
                f"{len(primes)} primes"
            )
        if self.pattern.vertices is None:
            object.__setattr__(
                self, "pattern", DegreePattern(self.pattern.degrees, primes)
            )
        elif tuple(self.pattern.vertices) != primes:
            raise DomainError("pattern vertices differ from pi(order)")

    @property
    def primes(self) -> Tuple[int, ...]:
        return self.order.primes()


@dataclass(frozen=True)
class OdCheck:
    name: str
    passed: bool
    detail: str = ""
    informational: bool = field(
        default=False,
        metadata={"doc": "Reported only; never affects the verdict"},
    )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "informational": self.informational,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class OdReport:
    target: Optional[GroupId]
    signature: OdSignature
    required_primes: Tuple[int, ...]
    candidates: Tuple[GroupOrderEntry, ...]
    checks: Tuple[OdCheck, ...]
    verdict: str

    @property
    def unique(self) -> bool:
        return (
            len(self.candidates) == 1
            and self.candidates[0].order == self.signature.order
        )

    def check(self, name: str) -> OdCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)
