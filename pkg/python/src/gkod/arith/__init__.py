"""Exact naturals, factorizations and p-part arithmetic."""

from .model import MIDDLE_DOT, Factorization, require_natural
from .ops import (
    PPartIdentity,
    gcd,
    mod_pow,
    p_part,
    valuation,
    verify_p_part_identity,
)

__all__ = [
    "Factorization",
    "MIDDLE_DOT",
    "PPartIdentity",
    "gcd",
    "mod_pow",
    "p_part",
    "require_natural",
    "valuation",
    "verify_p_part_identity",
]
