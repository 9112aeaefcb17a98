"""OD-characterization pipeline: signatures, shape predicates, filtering."""

from .model import (
    REPORT_KEYS,
    UNIQUE_VERDICT,
    OdCheck,
    OdReport,
    OdSignature,
)
from .shapes import frobenius_shape, nonsolvable_by_degrees, two_frobenius_shape
from .signature import (
    lemma_m_closed_form,
    lemma_m_squarefree_ks,
    signature_Ln2,
)
from .filter import default_required_primes, od_filter
from .report import (
    report_to_dict,
    report_to_json,
    report_to_text,
    report_to_yaml,
)

__all__ = [
    "OdCheck",
    "OdReport",
    "OdSignature",
    "REPORT_KEYS",
    "UNIQUE_VERDICT",
    "default_required_primes",
    "frobenius_shape",
    "lemma_m_closed_form",
    "lemma_m_squarefree_ks",
    "nonsolvable_by_degrees",
    "od_filter",
    "report_to_dict",
    "report_to_json",
    "report_to_text",
    "report_to_yaml",
    "signature_Ln2",
    "two_frobenius_shape",
]
