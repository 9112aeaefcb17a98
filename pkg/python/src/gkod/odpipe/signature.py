"""
OD signatures of L_n(2) and the square-divisibility sets of |Aut(L_n(2))|.
"""

from typing import Optional, Tuple

from ..arith.model import require_natural
from ..errors import DomainError
from ..factor import FactorCache, factor_mersenne
from ..gkgraph import build_gk_Ln2, degree_pattern
from ..orders import order_aut_Ln2, order_Ln2
from .model import OdSignature


def signature_Ln2(n: int, cache: Optional[FactorCache] = None) -> OdSignature:
    require_natural(n, "n", minimum=2)
    return OdSignature(
        order=order_Ln2(n, cache),
        pattern=degree_pattern(build_gk_Ln2(n, cache)),
    )


def lemma_m_squarefree_ks(
    n: int, cache: Optional[FactorCache] = None
) -> Tuple[int, ...]:
    """k in [2, n] with (2^k - 1)^2 not dividing |Aut(L_n(2))|."""
    require_natural(n, "n", minimum=3)
    aut = order_aut_Ln2(n, cache)
    return tuple(
        k
        for k in range(2, n + 1)
        if not (factor_mersenne(k, cache) ** 2).divides(aut)
    )


def lemma_m_closed_form(n: int) -> Tuple[int, ...]:
    """
    The same set in closed form for n >= 12: {floor(n/2) + 1, ..., n}.
    Smaller n are irregular and only available as printed lists.
    """
    require_natural(n, "n")
    if n < 12:
        raise DomainError(f"no closed form below n = 12, got {n}")
    return tuple(range(n // 2 + 1, n + 1))
