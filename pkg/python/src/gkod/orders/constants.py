"""
Loader for the group-constants file (``data/groups.txt``).

Headers (``<family> <params>``) are split here; the order data after ``:=``
is a small arithmetic language parsed with lark:

    integers, the variables r q i, + - * / ^, unary minus, parentheses,
    gcd(a, b) and prod(i=a..b, expr)

The file is checksummed: its SHA-256 must match ``data/groups.sha256``.
"""

import hashlib
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from lark import Lark, Tree, UnexpectedInput
from lark.visitors import Interpreter

from ..arith.model import Factorization
from ..errors import ConstantsParseError, DomainError, IntegrityError
from ..factor import factor
from .model import Family

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"
CONSTANTS_PATH = DATA_DIR / "groups.txt"
CHECKSUM_PATH = DATA_DIR / "groups.sha256"

_GRAMMAR = r"""
assignments: assignment (";" assignment)*
assignment: NAME "=" sum

?sum: product
    | sum "+" product -> add
    | sum "-" product -> sub
?product: power
    | product "*" power -> mul
    | product "/" power -> div
?power: unary
    | unary "^" power -> pow
?unary: atom
    | "-" unary -> neg
?atom: INT -> number
    | VAR -> var
    | "(" sum ")"
    | "gcd" "(" sum "," sum ")" -> gcd
    | "prod" "(" VAR "=" sum ".." sum "," sum ")" -> prod

NAME: "N" | "d" | "body"
VAR: "r" | "q" | "i"

%import common.INT
%import common.WS
%ignore WS
"""


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(_GRAMMAR, parser="lalr", start=["assignments", "sum"])


class _Evaluator(Interpreter):
    """Evaluates an expression tree under a variable binding."""

    def __init__(self, env: Dict[str, int]):
        super().__init__()
        self.env = dict(env)

    def number(self, tree: Tree) -> int:
        return int(tree.children[0])

    def var(self, tree: Tree) -> int:
        name = str(tree.children[0])
        if name not in self.env:
            raise DomainError(f"variable {name} is unbound")
        return self.env[name]

    def add(self, tree: Tree) -> int:
        a, b = self.visit_children(tree)
        return a + b

    def sub(self, tree: Tree) -> int:
        a, b = self.visit_children(tree)
        return a - b

    def mul(self, tree: Tree) -> int:
        a, b = self.visit_children(tree)
        return a * b

    def div(self, tree: Tree) -> int:
        a, b = self.visit_children(tree)
        if b == 0 or a % b:
            raise IntegrityError(f"inexact division {a} / {b}")
        return a // b

    def pow(self, tree: Tree) -> int:
        a, b = self.visit_children(tree)
        if b < 0:
            raise IntegrityError(f"negative exponent {b}")
        return a**b

    def neg(self, tree: Tree) -> int:
        (a,) = self.visit_children(tree)
        return -a

    def gcd(self, tree: Tree) -> int:
        a, b = self.visit_children(tree)
        return math.gcd(a, b)

    def prod(self, tree: Tree) -> int:
        result = 1
        for value in self.iterate(tree):
            result *= value
        return result

    def iterate(self, tree: Tree):
        """Values of the body of prod(i=a..b, body), one per index."""
        var, lo, hi, body = tree.children
        name = str(var)
        saved = self.env.get(name)
        try:
            for i in range(self.visit(lo), self.visit(hi) + 1):
                self.env[name] = i
                yield self.visit(body)
        finally:
            if saved is None:
                self.env.pop(name, None)
            else:
                self.env[name] = saved

    def terms(self, tree: Tree) -> List[int]:
        """Flatten top-level products into their factors."""
        if isinstance(tree, Tree) and tree.data == "mul":
            left, right = tree.children
            return self.terms(left) + self.terms(right)
        if isinstance(tree, Tree) and tree.data == "prod":
            return list(self.iterate(tree))
        return [self.visit(tree)]


def evaluate(tree: Tree, **env: int) -> int:
    return _Evaluator(env).visit(tree)


def evaluate_terms(tree: Tree, **env: int) -> List[int]:
    return _Evaluator(env).terms(tree)


@dataclass(frozen=True)
class LieFamilyData:
    """Order data for one Lie family: |S| = q^N * body / d."""

    family: Family
    min_rank: int
    fixed_rank: Optional[int] = None
    field_kind: str = "any"
    exponent: Tree = field(default=None, compare=False, repr=False)
    divisor: Tree = field(default=None, compare=False, repr=False)
    body: Tree = field(default=None, compare=False, repr=False)

    def allows_field(self, s: int, f: int) -> bool:
        match self.field_kind:
            case "odd":
                return s != 2
            case "2^odd":
                return s == 2 and f % 2 == 1
            case "3^odd":
                return s == 3 and f % 2 == 1
        return True

    def q_exponent(self, rank: int) -> int:
        """N, the exponent of q in the order."""
        return evaluate(self.exponent, r=rank)

    def order_value(self, rank: int, q: int) -> int:
        n = self.q_exponent(rank)
        d = evaluate(self.divisor, r=rank, q=q)
        return q**n * evaluate(self.body, r=rank, q=q) // d

    def order_factorization(
        self, rank: int, q: int, s: int, f: int, cache=None
    ) -> Factorization:
        """Factor the order term by term: q^N, each body factor, then / d."""
        n = self.q_exponent(rank)
        result = Factorization.from_mapping({s: f * n})
        for term in evaluate_terms(self.body, r=rank, q=q):
            result = result * factor(abs(term), cache)
        d = evaluate(self.divisor, r=rank, q=q)
        return result.divide(factor(d))


@dataclass(frozen=True)
class GroupConstants:
    lie: Dict[Family, LieFamilyData]
    sporadic: Dict[str, Factorization]
    tits: Factorization
    digest: str = ""

    def families(self) -> Tuple[LieFamilyData, ...]:
        return tuple(self.lie.values())


def _parse_params(family: Family, params: List[str], number: int) -> dict:
    data = {"family": family, "min_rank": 1}
    for param in params:
        if param.startswith("rank>="):
            data["min_rank"] = int(param[len("rank>=") :])
        elif param.startswith("rank="):
            data["min_rank"] = data["fixed_rank"] = int(param[len("rank=") :])
        elif param.startswith("field="):
            data["field_kind"] = param[len("field=") :]
        else:
            raise ConstantsParseError(f"unknown parameter {param!r}", number)
    return data


def _parse_product(text: str, number: int) -> Factorization:
    try:
        tree = _parser().parse(text, start="sum")
    except UnexpectedInput as e:
        raise ConstantsParseError("bad order expression", number, e) from e
    result = Factorization()
    for term in evaluate_terms(tree):
        result = result * factor(term)
    return result


def parse_constants(text: str, digest: str = "") -> GroupConstants:
    lie: Dict[Family, LieFamilyData] = {}
    sporadic: Dict[str, Factorization] = {}
    tits: Optional[Factorization] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header, sep, data = line.partition(":=")
        if not sep:
            raise ConstantsParseError("missing ':='", number)
        kind, *params = header.split()
        data = data.strip()
        if kind == "sporadic":
            sporadic[params[0]] = _parse_product(data, number)
        elif kind == "tits":
            tits = _parse_product(data, number)
        else:
            try:
                family = Family(kind)
                tree = _parser().parse(data, start="assignments")
            except (ValueError, UnexpectedInput) as e:
                raise ConstantsParseError(f"bad line for {kind}", number, e)
            parts = {str(a.children[0]): a.children[1] for a in tree.children}
            if set(parts) != {"N", "d", "body"}:
                raise ConstantsParseError("need N, d and body", number)
            lie[family] = LieFamilyData(
                **_parse_params(family, params, number),
                exponent=parts["N"],
                divisor=parts["d"],
                body=parts["body"],
            )
    if tits is None:
        raise ConstantsParseError("no Tits group entry", 0)
    return GroupConstants(lie=lie, sporadic=sporadic, tits=tits, digest=digest)


def verify_checksum(path: Path, checksum_path: Path) -> str:
    digest = hashlib.sha256(path.read_bytes()).hexdigest()
    expected = checksum_path.read_text(encoding="ascii").split()[0]
    if digest != expected:
        raise IntegrityError(
            f"checksum mismatch for {path.name}: {digest} != {expected}"
        )
    return digest


def load_constants(
    path: Path = CONSTANTS_PATH, checksum_path: Optional[Path] = CHECKSUM_PATH
) -> GroupConstants:
    digest = verify_checksum(path, checksum_path) if checksum_path else ""
    constants = parse_constants(path.read_text(encoding="ascii"), digest)
    logger.debug(
        f"loaded {len(constants.lie)} Lie families and "
        f"{len(constants.sporadic)} sporadic groups from {path.name}"
    )
    return constants


@lru_cache(maxsize=1)
def default_constants() -> GroupConstants:
    return load_constants()
