"""
Group orders: L_n(2), Aut(L_n(2)), order components and the simple-group
order database.
"""

from .model import (
    Family,
    GroupId,
    GroupOrderEntry,
    OrderComponent,
    OrderComponents,
    prime_power,
)
from .ids import (
    EXCLUSIONS,
    ISOMORPHISMS,
    SPORADIC_NAMES,
    canonical,
    parse_canonical,
    parse_group_id,
    validate,
)
from .constants import (
    GroupConstants,
    LieFamilyData,
    default_constants,
    load_constants,
    parse_constants,
)
from .formulas import (
    alternating_order,
    centralizer_sigma_order,
    order_aut_Ln2,
    order_Ln2,
    order_simple,
    out_order_Lnq,
    sigma_prime,
)
from .components import oc_aut, oc_aut_m1, s_and_components
from .database import db_enumerate_dividing, smallest_absent_prime

__all__ = [
    "EXCLUSIONS",
    "Family",
    "GroupConstants",
    "GroupId",
    "GroupOrderEntry",
    "ISOMORPHISMS",
    "LieFamilyData",
    "OrderComponent",
    "OrderComponents",
    "SPORADIC_NAMES",
    "alternating_order",
    "canonical",
    "centralizer_sigma_order",
    "db_enumerate_dividing",
    "default_constants",
    "load_constants",
    "oc_aut",
    "oc_aut_m1",
    "order_Ln2",
    "order_aut_Ln2",
    "order_simple",
    "out_order_Lnq",
    "parse_canonical",
    "parse_constants",
    "parse_group_id",
    "prime_power",
    "s_and_components",
    "sigma_prime",
    "smallest_absent_prime",
    "validate",
]
