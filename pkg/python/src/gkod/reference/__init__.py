"""Published tables and golden diffs against them."""

from .tables import (
    Table1Row,
    Table2Row,
    Table3,
    Table3Row,
    load_lemma_m,
    load_table1,
    load_table2,
    load_table3,
)
from .diff import (
    TABLE2_MANDATORY_MAX_N,
    Discrepancy,
    Table3Delta,
    diff_formula,
    diff_lemma_m,
    diff_pattern,
    diff_table1,
    diff_table3,
)

__all__ = [
    "Discrepancy",
    "TABLE2_MANDATORY_MAX_N",
    "Table1Row",
    "Table2Row",
    "Table3",
    "Table3Delta",
    "Table3Row",
    "diff_formula",
    "diff_lemma_m",
    "diff_pattern",
    "diff_table1",
    "diff_table3",
    "load_lemma_m",
    "load_table1",
    "load_table2",
    "load_table3",
]
