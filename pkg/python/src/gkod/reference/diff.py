"""
Golden diffs between computed values and the published tables.

A Discrepancy is mandatory when it must fail the run and advisory when it is
only reported (printed rows the tables assert without derivation).
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from ..arith.model import Factorization
from ..orders import GroupOrderEntry
from .tables import Table1Row, Table3

# Printed degree patterns up to this n are derived in the text; beyond it
# they are compared per vertex but only reported.
TABLE2_MANDATORY_MAX_N = 11


@dataclass(frozen=True)
class Discrepancy:
    table: str
    key: str
    expected: str
    actual: str
    mandatory: bool = True

    def __str__(self) -> str:
        text = (
            f"{self.table} {self.key}: printed {self.expected}, "
            f"computed {self.actual}"
        )
        return text if self.mandatory else text + " (advisory)"


def diff_table1(
    rows: Sequence[Table1Row], computed: Dict[int, Tuple[Factorization, int]]
) -> List[Discrepancy]:
    diffs = []
    for row in rows:
        order, s = computed[row.n]
        if order != row.order:
            diffs.append(
                Discrepancy(
                    "table1", f"n={row.n} order", str(row.order), str(order)
                )
            )
        if s != row.s:
            diffs.append(
                Discrepancy("table1", f"n={row.n} s", str(row.s), str(s))
            )
    return diffs


def diff_pattern(
    n: int,
    vertices: Sequence[int],
    computed: Sequence[int],
    printed: Sequence[int],
    mandatory: bool = True,
) -> List[Discrepancy]:
    """Per-vertex comparison of a degree pattern against a printed row."""
    if len(computed) != len(printed):
        return [
            Discrepancy(
                "table2",
                f"n={n} length",
                str(len(printed)),
                str(len(computed)),
                mandatory,
            )
        ]
    return [
        Discrepancy("table2", f"n={n} deg({p})", str(b), str(a), mandatory)
        for p, a, b in zip(vertices, computed, printed)
        if a != b
    ]


def diff_formula(
    n: int,
    vertices: Sequence[int],
    edges: Sequence[int],
    formula: Sequence[int],
) -> List[Discrepancy]:
    """Closed-form degrees against edge counts; always mandatory."""
    return [
        Discrepancy("table2", f"n={n} formula deg({p})", str(e), str(f))
        for p, e, f in zip(vertices, edges, formula)
        if e != f
    ]


@dataclass(frozen=True)
class Table3Delta:
    """Printed dividing groups against the exhaustive enumeration."""

    reconciliation: Tuple[Tuple[str, str], ...] = field(default=())
    missing: Tuple[Discrepancy, ...] = field(default=())
    mismatched: Tuple[Discrepancy, ...] = field(default=())
    extra: Tuple[GroupOrderEntry, ...] = field(default=())

    @property
    def mandatory(self) -> Tuple[Discrepancy, ...]:
        return self.missing + self.mismatched

    @property
    def ok(self) -> bool:
        return not self.mandatory


def diff_table3(
    table: Table3, entries: Iterable[GroupOrderEntry]
) -> Table3Delta:
    found = {e.id: e for e in entries}
    printed_ids = set()
    reconciliation, missing, mismatched = [], [], []
    for row in table.rows:
        gid = row.id
        printed_ids.add(gid)
        reconciliation.append((row.label, gid.name))
        entry = found.get(gid)
        if entry is None:
            missing.append(
                Discrepancy(
                    "table3", gid.name, str(row.order), "not enumerated"
                )
            )
        elif entry.order != row.order:
            mismatched.append(
                Discrepancy(
                    "table3", gid.name, str(row.order), str(entry.order)
                )
            )
    extra = tuple(e for gid, e in found.items() if gid not in printed_ids)
    return Table3Delta(
        reconciliation=tuple(reconciliation),
        missing=tuple(missing),
        mismatched=tuple(mismatched),
        extra=extra,
    )


def diff_lemma_m(
    n: int, computed: Sequence[int], expected: Sequence[int], source: str
) -> List[Discrepancy]:
    if tuple(computed) == tuple(expected):
        return []
    return [
        Discrepancy(
            "lemma-m",
            f"n={n} ({source})",
            str(list(expected)),
            str(list(computed)),
        )
    ]
