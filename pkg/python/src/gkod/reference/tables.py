"""
Published tables, stored verbatim as YAML under ``data/``.

These are never derived from code; the reproduction commands diff computed
values against them.
"""

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Tuple

from ruamel.yaml import YAML

from ..arith.model import Factorization
from ..errors import IntegrityError
from ..orders import GroupId, parse_canonical

DATA_DIR = Path(__file__).parent / "data"


@dataclass(frozen=True)
class Table1Row:
    n: int
    order: Factorization
    s: int


@dataclass(frozen=True)
class Table2Row:
    n: int
    pattern: Tuple[int, ...]


@dataclass(frozen=True)
class Table3Row:
    label: str
    order: Factorization

    @property
    def id(self) -> GroupId:
        return parse_canonical(self.label)

    @property
    def name(self) -> str:
        return self.id.name


@dataclass(frozen=True)
class Table3:
    target: Factorization
    rows: Tuple[Table3Row, ...]


def _load(name: str) -> Dict[str, Any]:
    path = DATA_DIR / name
    data = YAML(typ="safe").load(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "rows" not in data:
        raise IntegrityError(f"{path.name} has no rows")
    return data


@lru_cache(maxsize=1)
def load_table1() -> Tuple[Table1Row, ...]:
    return tuple(
        Table1Row(n=r["n"], order=Factorization.parse(r["order"]), s=r["s"])
        for r in _load("table1.yaml")["rows"]
    )


@lru_cache(maxsize=1)
def load_table2() -> Dict[int, Table2Row]:
    return {
        r["n"]: Table2Row(n=r["n"], pattern=tuple(r["pattern"]))
        for r in _load("table2.yaml")["rows"]
    }


@lru_cache(maxsize=1)
def load_table3() -> Table3:
    data = _load("table3.yaml")
    return Table3(
        target=Factorization.parse(data["target"]),
        rows=tuple(
            Table3Row(label=r["label"], order=Factorization.parse(r["order"]))
            for r in data["rows"]
        ),
    )


@lru_cache(maxsize=1)
def load_lemma_m() -> Dict[int, Tuple[int, ...]]:
    return {r["n"]: tuple(r["ks"]) for r in _load("lemma_m.yaml")["rows"]}
