"""
Reproduction runs behind the CLI commands.

Each run computes its values with the library, diffs them against the
published tables where there is one, and returns a Reproduction: rows of
display strings plus the discrepancies and notes. A run fails when any
mandatory discrepancy is present.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .const import KNOWN_MERSENNE_EXPONENTS
from .errors import DomainError
from .factor import FactorCache, lucas_lehmer, mersenne_sweep
from .gkgraph import (
    aut_constraints,
    aut_degree_bounds,
    build_gk_Ln2,
    connected_components,
    degree_by_formula,
    degree_pattern,
)
from .odpipe import lemma_m_closed_form, lemma_m_squarefree_ks
from .odpipe.shapes import nonsolvable_by_degrees
from .orders import (
    centralizer_sigma_order,
    db_enumerate_dividing,
    oc_aut,
    order_aut_Ln2,
    order_Ln2,
    s_and_components,
)
from .reference import (
    TABLE2_MANDATORY_MAX_N,
    Discrepancy,
    diff_formula,
    diff_lemma_m,
    diff_pattern,
    diff_table1,
    diff_table3,
    load_lemma_m,
    load_table1,
    load_table2,
    load_table3,
)

logger = logging.getLogger(__name__)

Row = Tuple[str, ...]


@dataclass(frozen=True)
class Reproduction:
    title: str
    columns: Row
    rows: Tuple[Row, ...]
    diffs: Tuple[Discrepancy, ...] = field(default=())
    notes: Tuple[str, ...] = field(default=())

    @property
    def failed(self) -> bool:
        return any(d.mandatory for d in self.diffs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "rows": [dict(zip(self.columns, row)) for row in self.rows],
            "diffs": [
                {
                    "table": d.table,
                    "key": d.key,
                    "printed": d.expected,
                    "computed": d.actual,
                    "mandatory": d.mandatory,
                }
                for d in self.diffs
            ],
            "notes": list(self.notes),
            "failed": self.failed,
        }


def _pattern_text(degrees: Sequence[int]) -> str:
    return "(" + ", ".join(str(d) for d in degrees) + ")"


def reproduce_table1(cache: Optional[FactorCache] = None) -> Reproduction:
    printed = load_table1()
    computed = {}
    rows: List[Row] = []
    for row in printed:
        order = order_Ln2(row.n, cache)
        s = s_and_components(row.n, cache).s
        computed[row.n] = (order, s)
        rows.append((f"L_{row.n}(2)", str(order), str(s)))
    return Reproduction(
        title="Orders and prime-graph components of L_n(2)",
        columns=("G", "|G|", "s(G)"),
        rows=tuple(rows),
        diffs=tuple(diff_table1(printed, computed)),
    )


def reproduce_table2(
    max_n: int = 20, cache: Optional[FactorCache] = None
) -> Reproduction:
    if max_n < 2:
        raise DomainError(f"max_n must be >= 2, got {max_n}")
    printed = load_table2()
    rows: List[Row] = []
    diffs: List[Discrepancy] = []
    notes: List[str] = []
    for n in range(2, max_n + 1):
        g = build_gk_Ln2(n, cache)
        pattern = degree_pattern(g).degrees
        formula = tuple(degree_by_formula(n, p, cache) for p in g.vertices)
        diffs.extend(diff_formula(n, g.vertices, pattern, formula))
        agree = "yes" if formula == pattern else "no"
        row = printed.get(n)
        if row is None:
            notes.append(f"n={n}: no printed row")
            shown = "-"
        else:
            mandatory = n <= TABLE2_MANDATORY_MAX_N
            diffs.extend(
                diff_pattern(n, g.vertices, pattern, row.pattern, mandatory)
            )
            shown = "yes" if row.pattern == pattern else "no"
        rows.append((f"L_{n}(2)", _pattern_text(pattern), agree, shown))
    return Reproduction(
        title="Degree patterns of GK(L_n(2))",
        columns=("G", "D(G)", "formula", "printed"),
        rows=tuple(rows),
        diffs=tuple(diffs),
        notes=tuple(notes),
    )


def reproduce_table3(cache: Optional[FactorCache] = None) -> Reproduction:
    table = load_table3()
    entries = db_enumerate_dividing(table.target, (), cache)
    delta = diff_table3(table, entries)
    printed_names = {name: label for label, name in delta.reconciliation}
    rows = tuple(
        (e.name, str(e.order), printed_names.get(e.name, "(not printed)"))
        for e in entries
    )
    notes = [
        f"{len(table.rows)} printed groups, {len(entries)} enumerated",
        *(f"extra: {e.name} {e.order}" for e in delta.extra),
        *(
            f"label {label} -> {name}"
            for label, name in delta.reconciliation
            if label != name
        ),
    ]
    return Reproduction(
        title=f"Simple groups with order dividing {table.target}",
        columns=("S", "|S|", "printed as"),
        rows=rows,
        diffs=delta.mandatory,
        notes=tuple(notes),
    )


def reproduce_lemma_m(
    n: int, cache: Optional[FactorCache] = None
) -> Reproduction:
    computed = lemma_m_squarefree_ks(n, cache)
    printed = load_lemma_m()
    if n in printed:
        expected, source = printed[n], "printed"
    elif n >= 12:
        expected, source = lemma_m_closed_form(n), "closed form"
    else:
        expected, source = None, None
    diffs = diff_lemma_m(n, computed, expected, source) if expected else []
    ks = "{" + ", ".join(str(k) for k in computed) + "}"
    return Reproduction(
        title=f"k with (2^k - 1)^2 not dividing |Aut(L_{n}(2))|",
        columns=("n", "k", "checked against"),
        rows=((str(n), ks, source or "-"),),
        diffs=tuple(diffs),
    )


def reproduce_mersenne(max_p: int) -> Reproduction:
    sweep = mersenne_sweep(max_p)
    diffs = [
        Discrepancy("mersenne", f"p={p}", "Mersenne prime", "composite")
        for p in sweep.missing
    ] + [
        Discrepancy("mersenne", f"p={p}", "not listed", "Mersenne prime")
        for p in sweep.unexpected
    ]
    notes = []
    if max_p > KNOWN_MERSENNE_EXPONENTS[-1]:
        notes.append(
            f"the published list ends at {KNOWN_MERSENNE_EXPONENTS[-1]}"
        )
    return Reproduction(
        title=f"Exponents p <= {max_p} with 2^p - 1 prime",
        columns=("p",),
        rows=tuple((str(p),) for p in sweep.found),
        diffs=tuple(diffs),
        notes=tuple(notes),
    )


def reproduce_aut_check(
    p: int, cache: Optional[FactorCache] = None
) -> Reproduction:
    """
    For n in {p, p+1}: order components of Aut(L_n(2)), |C_L(sigma)| and the
    degree constraints GK(Aut(L)) inherits from GK(L).
    """
    if p < 3 or not lucas_lehmer(p):
        raise DomainError(f"2^{p}-1 must be a Mersenne prime with p odd")
    rows: List[Row] = []
    diffs: List[Discrepancy] = []
    for n in (p, p + 1):
        oc = oc_aut(n, cache)
        m1, m2 = oc.components
        g = build_gk_Ln2(n, cache)
        components = connected_components(g)
        bounds = aut_degree_bounds(g, isolated=m2.primes)
        own = aut_constraints(g, degree_pattern(g))
        upper = aut_constraints(g, bounds.upper)
        if not own or not upper:
            diffs.append(
                Discrepancy(
                    "aut-check",
                    f"n={n} degree bounds",
                    "consistent",
                    "; ".join(own.violations + upper.violations),
                )
            )
        if tuple(m2.primes) not in components:
            diffs.append(
                Discrepancy(
                    "aut-check",
                    f"n={n} components",
                    f"{{{m2.m}}} isolated",
                    str(components),
                )
            )
        rows.append(
            (
                f"Aut(L_{n}(2))",
                str(order_aut_Ln2(n, cache)),
                str(m1.part),
                str(m2.part),
                str(centralizer_sigma_order(n)),
                _pattern_text(bounds.upper.degrees),
                "yes" if nonsolvable_by_degrees(bounds.upper) else "no",
            )
        )
    return Reproduction(
        title=f"Aut(L_n(2)) for n in {{{p}, {p + 1}}}",
        columns=(
            "G",
            "|G|",
            "m_1",
            "m_2",
            "|C_L(sigma)|",
            "D upper bound",
            "nonsolvable by degrees",
        ),
        rows=tuple(rows),
        diffs=tuple(diffs),
    )
