"""Tests for group identifier parsing and canonical forms."""

import pytest

from gkod.errors import DomainError
from gkod.orders import (
    Family,
    GroupId,
    canonical,
    parse_canonical,
    parse_group_id,
)


class TestParse:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("L_10(2)", GroupId(Family.A, rank=9, q=2)),
            ("A_1(49)", GroupId(Family.A, rank=1, q=49)),
            ("L_2(7^2)", GroupId(Family.A, rank=1, q=49)),
            ("U_5(2)", GroupId(Family.TWISTED_A, rank=4, q=2)),
            ("2A_4(2)", GroupId(Family.TWISTED_A, rank=4, q=2)),
            ("S_10(2)", GroupId(Family.C, rank=5, q=2)),
            ("O_7(3)", GroupId(Family.B, rank=3, q=3)),
            ("O_8^+(2)", GroupId(Family.D, rank=4, q=2)),
            ("O_10^-(2)", GroupId(Family.TWISTED_D, rank=5, q=2)),
            ("3D_4(2)", GroupId(Family.TRIALITY_D4, rank=4, q=2)),
            ("Alt_7", GroupId.alternating(7)),
            ("A_7", GroupId.alternating(7)),
            ("2F_4(2)'", GroupId.tits()),
            ("Co1", GroupId.sporadic("Co_1")),
            ("Fi24", GroupId.sporadic("Fi_24'")),
        ],
    )
    def test_forms(self, text, expected):
        assert parse_group_id(text) == expected

    @pytest.mark.parametrize(
        "text", ["X_3(2)", "L_3", "S_5(2)", "O_8(2)", "L_3(2)'", ""]
    )
    def test_rejects(self, text):
        with pytest.raises(DomainError):
            parse_group_id(text)


class TestCanonical:
    @pytest.mark.parametrize(
        "text, name",
        [
            ("L_2(4)", "Alt_5"),
            ("L_2(5)", "Alt_5"),
            ("L_2(9)", "Alt_6"),
            ("L_4(2)", "Alt_8"),
            ("L_3(2)", "L_2(7)"),
            ("B_3(2)", "S_6(2)"),
            ("O_5(3)", "U_4(2)"),
            ("C_2(3)", "U_4(2)"),
            ("O_9(2)", "S_8(2)"),
            ("L_3(2^2)", "L_3(4)"),
            ("O_8^+(2)", "O_8^+(2)"),
        ],
    )
    def test_isomorphisms(self, text, name):
        assert parse_canonical(text).name == name

    def test_lie_name(self):
        assert GroupId.linear(2, 49).lie_name == "A_1(49)"
        assert GroupId(Family.TWISTED_A, rank=4, q=2).lie_name == "2A_4(2)"
        assert GroupId.alternating(5).lie_name == "Alt_5"

    def test_idempotent(self):
        for text in ("L_2(4)", "B_2(5)", "O_9(2)", "L_3(2)"):
            once = parse_canonical(text)
            assert canonical(once) == once

    @pytest.mark.parametrize(
        "text",
        ["L_2(2)", "L_2(3)", "U_3(2)", "S_4(2)", "G_2(2)", "Alt_4", "L_2(6)"],
    )
    def test_not_simple(self, text):
        with pytest.raises(DomainError):
            parse_canonical(text)

    def test_fixed_rank(self):
        with pytest.raises(DomainError):
            GroupId.lie(Family.G2, 3, 4)
