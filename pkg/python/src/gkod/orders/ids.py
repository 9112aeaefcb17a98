"""
Parsing, validation and canonicalization of group identifiers.

Accepted text forms:

    Lie notation        A_1(49)  2A_4(2)  B_3(2)  3D_4(2)  E_8(q)
    classical notation  L_2(7^2) U_5(2)  S_10(2)  O_7(3)  O_8^+(2)  O_10^-(2)
    alternating         Alt_5  A_5
    sporadic            M_11  J_2  He  Co_1  Fi_24'  (see SPORADIC_NAMES)
    Tits group          2F_4(2)'

Every abstract group has exactly one canonical GroupId; the exceptional
isomorphisms folded by `canonical` are listed in ISOMORPHISMS.
"""

from functools import lru_cache
from typing import Dict, Optional, Tuple

from lark import Lark, Token, UnexpectedInput

from ..errors import DomainError
from .model import FIXED_RANK, Family, GroupId, prime_power

SPORADIC_NAMES: Tuple[str, ...] = (
    "M_11", "M_12", "J_1", "M_22", "J_2", "M_23", "HS", "J_3", "M_24",
    "McL", "He", "Ru", "Suz", "O'N", "Co_3", "Co_2", "Fi_22", "HN", "Ly",
    "Th", "Fi_23", "Co_1", "J_4", "Fi_24'", "B", "M",
)  # fmt: skip

_SPORADIC_ALIASES: Dict[str, str] = {
    **{name: name for name in SPORADIC_NAMES},
    **{name.replace("_", ""): name for name in SPORADIC_NAMES},
    "ON": "O'N",
    "Fi24": "Fi_24'",
    "Fi_24": "Fi_24'",
    "BM": "B",
}

ISOMORPHISMS = (
    ("A_1(4)", "Alt_5"),
    ("A_1(5)", "Alt_5"),
    ("A_1(9)", "Alt_6"),
    ("A_3(2)", "Alt_8"),
    ("A_2(2)", "A_1(7)"),
    ("B_n(2^m)", "C_n(2^m)"),
    ("B_2(q)", "C_2(q)"),
    ("C_2(3)", "2A_3(2)"),
)

# Parameters for which the group is not simple.
EXCLUSIONS = {
    (Family.A, 1, 2): "A_1(2) is solvable",
    (Family.A, 1, 3): "A_1(3) is solvable",
    (Family.TWISTED_A, 2, 2): "2A_2(2) is solvable",
    (Family.C, 2, 2): "B_2(2) = C_2(2) is not simple (isomorphic to S_6)",
    (Family.G2, 2, 2): "G_2(2) is not simple",
    (Family.SUZUKI, 2, 2): "2B_2(2) is solvable",
    (Family.REE_G2, 2, 3): "2G_2(3) is not simple",
    (Family.REE_F4, 4, 2): "2F_4(2) is not simple; its derived group is Tits",
}

_MIN_RANK = {
    Family.A: 1,
    Family.TWISTED_A: 2,
    Family.B: 2,
    Family.C: 2,
    Family.D: 4,
    Family.TWISTED_D: 4,
}

_GRAMMAR = r"""
start: TWIST? SYMBOL "_" INT SIGN? field? TICK?
field: "(" INT ("^" INT)? ")"

TWIST: "2" | "3"
SYMBOL: /Alt|[A-GLOSU]/
SIGN: /\^?[+-]/
TICK: "'"

%import common.INT
%import common.WS
%ignore WS
"""


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(_GRAMMAR, parser="lalr")


def _classical(
    symbol: str, degree: int, sign: Optional[str], q: int
) -> GroupId:
    match symbol:
        case "L":
            return GroupId(Family.A, rank=degree - 1, q=q)
        case "U":
            return GroupId(Family.TWISTED_A, rank=degree - 1, q=q)
        case "S":
            if degree % 2:
                raise DomainError(f"S_{degree} needs an even degree")
            return GroupId(Family.C, rank=degree // 2, q=q)
        case "O" if degree % 2:
            return GroupId(Family.B, rank=(degree - 1) // 2, q=q)
        case "O":
            if sign is None:
                raise DomainError(f"O_{degree} needs a sign (+ or -)")
            family = Family.D if sign.endswith("+") else Family.TWISTED_D
            return GroupId(family, rank=degree // 2, q=q)
    raise DomainError(f"unknown classical symbol {symbol!r}")


def _lie(twist: Optional[str], symbol: str, rank: int, q: int) -> GroupId:
    key = f"{twist or ''}{symbol}"
    if key in ("A", "2A", "B", "C", "D", "2D"):
        return GroupId(Family(key), rank=rank, q=q)
    family = {
        "G": Family.G2,
        "F": Family.F4,
        "3D": Family.TRIALITY_D4,
        "2B": Family.SUZUKI,
        "2G": Family.REE_G2,
        "2F": Family.REE_F4,
    }.get(key)
    if key == "E" and rank in (6, 7, 8):
        family = Family(f"E{rank}")
    elif key == "2E" and rank == 6:
        family = Family.TWISTED_E6
    if family is None:
        raise DomainError(f"unknown family {key!r}")
    return GroupId.lie(family, rank, q)


def parse_group_id(text: str) -> GroupId:
    """Parse a group identifier, without canonicalizing it."""
    cleaned = text.strip()
    if cleaned in _SPORADIC_ALIASES:
        return GroupId.sporadic(_SPORADIC_ALIASES[cleaned])
    try:
        tree = _parser().parse(cleaned)
    except UnexpectedInput as e:
        raise DomainError(f"cannot parse group identifier {text!r}") from e

    tokens = {t.type: t for t in tree.children if isinstance(t, Token)}
    subtrees = [c for c in tree.children if not isinstance(c, Token)]
    field_tree = subtrees[0] if subtrees else None
    twist = str(tokens["TWIST"]) if "TWIST" in tokens else None
    symbol = str(tokens["SYMBOL"])
    index = int(tokens["INT"])
    sign = str(tokens["SIGN"]) if "SIGN" in tokens else None

    if field_tree is None:
        if symbol in ("A", "Alt") and twist is None and sign is None:
            return GroupId.alternating(index)
        raise DomainError(f"{text!r} needs a field size")
    base, *power = (int(t) for t in field_tree.children)
    q = base ** (power[0] if power else 1)

    if "TICK" in tokens:
        if (twist, symbol, index, q) == ("2", "F", 4, 2):
            return GroupId.tits()
        raise DomainError(f"only 2F_4(2)' takes a prime: {text!r}")
    if symbol in ("L", "U", "S", "O") and twist is None:
        return _classical(symbol, index, sign, q)
    if symbol == "Alt" or sign is not None:
        raise DomainError(f"cannot interpret {text!r}")
    return _lie(twist, symbol, index, q)


def validate(gid: GroupId) -> GroupId:
    """Raise DomainError unless gid names a simple group."""
    family = gid.family
    if family == Family.ALTERNATING:
        if gid.rank is None or gid.rank < 5:
            raise DomainError(f"Alt_{gid.rank} is not simple (needs m >= 5)")
        return gid
    if family == Family.SPORADIC:
        if gid.sporadic_name not in SPORADIC_NAMES:
            raise DomainError(f"unknown sporadic group {gid.sporadic_name!r}")
        return gid
    if family == Family.TITS:
        return gid

    s, f = prime_power(gid.q)
    if family in FIXED_RANK:
        if gid.rank != FIXED_RANK[family]:
            raise DomainError(f"{family} has rank {FIXED_RANK[family]}")
    elif gid.rank is None or gid.rank < _MIN_RANK[family]:
        raise DomainError(
            f"{family} needs rank >= {_MIN_RANK[family]}, got {gid.rank}"
        )
    if family == Family.SUZUKI and (s != 2 or f % 2 == 0):
        raise DomainError("2B_2(q) needs q = 2^(2m+1)")
    if family == Family.REE_G2 and (s != 3 or f % 2 == 0):
        raise DomainError("2G_2(q) needs q = 3^(2m+1)")
    if family == Family.REE_F4 and (s != 2 or f % 2 == 0):
        raise DomainError("2F_4(q) needs q = 2^(2m+1)")
    reason = EXCLUSIONS.get((family, gid.rank, gid.q))
    if reason:
        raise DomainError(reason)
    return gid


def canonical(gid: GroupId) -> GroupId:
    """Fold exceptional isomorphisms, then validate."""
    family, rank, q = gid.family, gid.rank, gid.q
    if family == Family.B and gid.q is not None:
        if rank == 2 or q % 2 == 0:
            return canonical(GroupId(Family.C, rank=rank, q=q))
    if family == Family.C and (rank, q) == (2, 3):
        return GroupId(Family.TWISTED_A, rank=3, q=2)
    if family == Family.A:
        match (rank, q):
            case (1, 4) | (1, 5):
                return GroupId.alternating(5)
            case (1, 9):
                return GroupId.alternating(6)
            case (3, 2):
                return GroupId.alternating(8)
            case (2, 2):
                return GroupId(Family.A, rank=1, q=7)
    return validate(gid)


def parse_canonical(text: str) -> GroupId:
    return canonical(parse_group_id(text))
