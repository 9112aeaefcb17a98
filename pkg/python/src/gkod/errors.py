"""
Exception hierarchy for gkod.

Every failure raised by the library derives from GkodError so the CLI can map
it to a single exit status. Parse failures carry their location the same way
configuration errors do.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional


class GkodError(Exception):
    """Base class for all gkod errors."""

    pass


class DomainError(GkodError, ValueError):
    """An argument lies outside the domain of an operation."""

    pass


class PreconditionError(DomainError):
    """The hypotheses of an identity or formula do not hold."""

    pass


class IntegrityError(GkodError):
    """A stored or computed value failed verification."""

    pass


@dataclass
class IncompleteFactorizationError(GkodError):
    """Raised when factoring gives up on a composite cofactor."""

    composite: int
    budget: int = 0

    def __str__(self) -> str:
        msg = f"incomplete factorization: could not split {self.composite}"
        if self.budget:
            msg += f" within {self.budget} iterations"
        return msg


@dataclass
class CacheParseError(GkodError):
    """Raised when a factor-cache line does not match the file format."""

    message: str
    line_number: int
    line: str = ""
    file_path: Optional[Path] = None

    def __str__(self) -> str:
        parts = [f"line {self.line_number}: {self.message}"]
        if self.line:
            parts.append(f" [{self.line!r}]")
        if self.file_path:
            parts.append(f" in {self.file_path}")
        return "".join(parts)


@dataclass
class ConstantsParseError(GkodError):
    """Raised when the group-constants file cannot be parsed."""

    message: str
    line_number: int
    cause: Optional[Exception] = None

    def __str__(self) -> str:
        msg = f"group constants line {self.line_number}: {self.message}"
        if self.cause:
            msg += f" ({type(self.cause).__name__}: {self.cause})"
        return msg
