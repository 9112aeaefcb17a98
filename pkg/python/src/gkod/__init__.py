"""
gkod - Prime graphs and OD-characterization of L_n(2)

Exact arithmetic for the projective special linear groups L_n(2): group
orders, primitive prime divisors of 2^k - 1, Gruenberg-Kegel prime graphs,
degree patterns, independence numbers and the order/degree-pattern candidate
filter. Every value is an exact integer or rational.

Quick Start
-----------

    import gkod

    gkod.order_Ln2(10)
    # 2^45·3^6·5^2·7^3·11·17·31^2·73·127

    g = gkod.build_gk_Ln2(10)
    gkod.degree_pattern(g)
    # (6, 7, 5, 6, 2, 3, 5, 1, 3)

    gkod.alpha_exact(g).size
    # 4

    report = gkod.od_filter(gkod.signature_Ln2(10))
    report.verdict
    # 'candidate filter uniquely resolves to L_10(2)'

Core Concepts
-------------

Factorization:
    Immutable prime-power product. Parsed from and printed as
    "2^45·3^8·5^2", the notation used by the factor cache and the tables.

PrimeGraph / DegreePattern:
    GK(L_n(2)) on the primes of |L_n(2)|, ascending, and its degree
    sequence in that order.

Factor cache:
    Factorizations of 2^k - 1, k <= 127, shipped with the package and
    verified on load. Point --cache or $GK_FACTOR_CACHE at another file.

Error Handling:
    Every library failure derives from GkodError. Domain errors never
    return partial results.

See Also
--------

CLI: gkod --help
Tests: python/tests/gkod/
"""

from .arith import Factorization
from .errors import (
    DomainError,
    GkodError,
    IncompleteFactorizationError,
    IntegrityError,
    PreconditionError,
)
from .factor import FactorCache, factor_mersenne, is_prime, lucas_lehmer
from .gkgraph import (
    DegreePattern,
    PrimeGraph,
    build_gk_Ln2,
    degree_by_formula,
    degree_pattern,
)
from .indep import alpha_exact, caro_wei, t2
from .odpipe import OdReport, OdSignature, od_filter, signature_Ln2
from .orders import (
    GroupId,
    db_enumerate_dividing,
    oc_aut,
    order_aut_Ln2,
    order_Ln2,
    order_simple,
    s_and_components,
)
from .ppd import mult_order_of_2, ppd_set

__version__ = "0.1.0"
__all__ = [
    # Exact values
    "Factorization",
    "FactorCache",
    "factor_mersenne",
    "is_prime",
    "lucas_lehmer",
    "mult_order_of_2",
    "ppd_set",
    # Orders
    "GroupId",
    "db_enumerate_dividing",
    "oc_aut",
    "order_Ln2",
    "order_aut_Ln2",
    "order_simple",
    "s_and_components",
    # Graphs
    "DegreePattern",
    "PrimeGraph",
    "alpha_exact",
    "build_gk_Ln2",
    "caro_wei",
    "degree_by_formula",
    "degree_pattern",
    "t2",
    # OD pipeline
    "OdReport",
    "OdSignature",
    "od_filter",
    "signature_Ln2",
    # Errors
    "DomainError",
    "GkodError",
    "IncompleteFactorizationError",
    "IntegrityError",
    "PreconditionError",
]
