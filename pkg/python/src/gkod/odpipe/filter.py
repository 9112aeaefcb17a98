"""
Candidate filtering for OD-characterization.

Given a signature (|G|, D(G)) and a set of required primes, enumerate the
simple groups S with |S| dividing |G| and pi(S) containing the required
primes, then attach the degree-based checks. The verdict states only what the
filter computes; it never claims the signature determines G.
"""

import logging
from typing import Iterable, List, Optional, Tuple

from ..errors import DomainError
from ..factor import FactorCache
from ..indep import caro_wei, t_lower_bound
from ..orders import GroupId, GroupOrderEntry, db_enumerate_dividing
from .model import UNIQUE_VERDICT, OdCheck, OdReport, OdSignature
from .shapes import frobenius_shape, nonsolvable_by_degrees, two_frobenius_shape

logger = logging.getLogger(__name__)


def default_required_primes(sig: OdSignature) -> Tuple[int, ...]:
    """The two odd vertices of least degree, ties broken by the prime."""
    odd = [
        (deg, p)
        for p, deg in zip(sig.primes, sig.pattern.degrees)
        if p != 2
    ]
    return tuple(sorted(p for _, p in sorted(odd)[:2]))


def _checks(
    sig: OdSignature, candidates: List[GroupOrderEntry]
) -> List[OdCheck]:
    d = sig.pattern.degrees
    primes = sig.primes
    bound = caro_wei(d)
    t_low = t_lower_bound(d)
    checks = [
        OdCheck(
            "caro-wei",
            passed=t_low >= 3,
            detail=f"sum = {bound} ~ {float(bound):.4f}, t(G) >= {t_low}",
        )
    ]
    if 2 in primes:
        deg2 = sig.pattern.degree_of(2)
        checks.append(
            OdCheck(
                "t2-lower-bound",
                passed=deg2 <= len(primes) - 3,
                detail=f"deg(2) = {deg2}, |pi| - 3 = {len(primes) - 3}",
            )
        )
    checks.append(
        OdCheck("not-frobenius", passed=not frobenius_shape(d), detail=str(d))
    )
    checks.append(
        OdCheck(
            "not-2-frobenius", passed=not two_frobenius_shape(d), detail=str(d)
        )
    )
    try:
        nonsolvable = nonsolvable_by_degrees(d)
        detail = "Omega_0 and some Omega_i, 1 <= i <= |pi| - 3, are nonempty"
        if not nonsolvable:
            detail = "predicate does not apply (no conclusion drawn)"
    except DomainError as e:
        nonsolvable, detail = False, str(e)
    checks.append(
        OdCheck(
            "nonsolvable-by-degrees",
            passed=nonsolvable,
            detail=detail,
            informational=True,
        )
    )
    bad = [c.name for c in candidates if not c.order.divides(sig.order)]
    checks.append(
        OdCheck(
            "candidate-order-divides",
            passed=not bad,
            detail=(
                f"{len(candidates)} candidate(s) divide |G|"
                if not bad
                else f"orders not dividing |G|: {', '.join(bad)}"
            ),
        )
    )
    return checks


def _verdict(sig: OdSignature, candidates: List[GroupOrderEntry]) -> str:
    if len(candidates) == 1 and candidates[0].order == sig.order:
        return UNIQUE_VERDICT.format(candidates[0].name)
    if not candidates:
        return "no simple group passes the candidate filter"
    names = ", ".join(c.name for c in candidates)
    return f"{len(candidates)} candidates remain: {names}"


def od_filter(
    sig: OdSignature,
    required_primes: Optional[Iterable[int]] = None,
    target: Optional[GroupId] = None,
    cache: Optional[FactorCache] = None,
) -> OdReport:
    """
    Run the candidate filter; `required_primes` defaults to
    `default_required_primes(sig)`.
    """
    if required_primes is None:
        required = default_required_primes(sig)
    else:
        required = tuple(sorted(set(required_primes)))
    missing = set(required) - set(sig.primes)
    if missing:
        raise DomainError(
            f"required primes {sorted(missing)} do not divide |G|"
        )

    candidates = db_enumerate_dividing(sig.order, required, cache)
    logger.debug(
        f"od filter on {sig.order} with {required}: "
        f"{[c.name for c in candidates]}"
    )
    if target is None and len(candidates) == 1:
        target = candidates[0].id
    return OdReport(
        target=target,
        signature=sig,
        required_primes=required,
        candidates=tuple(candidates),
        checks=tuple(_checks(sig, candidates)),
        verdict=_verdict(sig, candidates),
    )
