"""Tests for the published tables and the reproduction runs."""

import json

import pytest

from gkod.arith import Factorization
from gkod.errors import DomainError
from gkod.reference import (
    Discrepancy,
    Table1Row,
    diff_pattern,
    diff_table1,
    load_lemma_m,
    load_table1,
    load_table2,
    load_table3,
)
from gkod.rendering import render, render_table
from gkod.reproduce import (
    reproduce_aut_check,
    reproduce_lemma_m,
    reproduce_mersenne,
    reproduce_table1,
    reproduce_table2,
    reproduce_table3,
)


class TestTables:
    def test_table1(self):
        rows = load_table1()
        assert [r.n for r in rows] == list(range(2, 12))
        assert rows[8].order == Factorization.parse(
            "2^45·3^6·5^2·7^3·11·17·31^2·73·127"
        )

    def test_table2(self):
        rows = load_table2()
        assert sorted(rows) == list(range(2, 21))
        assert rows[5].pattern == (2, 3, 1, 2, 0)
        assert rows[10].pattern == (6, 7, 5, 6, 2, 3, 5, 1, 3)

    def test_table3(self):
        table = load_table3()
        assert len(table.rows) == 50
        assert table.target.primes()[-1] == 127

    def test_lemma_m(self):
        printed = load_lemma_m()
        assert sorted(printed) == list(range(3, 12))
        assert printed[10] == (7, 8, 9, 10)


class TestDiffs:
    def test_table1_difference(self):
        row = Table1Row(n=2, order=Factorization.parse("2·5"), s=2)
        diffs = diff_table1([row], {2: (Factorization.parse("2·3"), 2)})
        assert [d.key for d in diffs] == ["n=2 order"]
        assert diffs[0].mandatory

    def test_pattern_per_vertex(self):
        diffs = diff_pattern(5, (2, 3, 5), (1, 2, 1), (1, 1, 1), False)
        assert len(diffs) == 1
        assert str(diffs[0]) == (
            "table2 n=5 deg(3): printed 1, computed 2 (advisory)"
        )

    def test_pattern_length(self):
        diffs = diff_pattern(5, (2, 3), (1, 1), (1, 1, 0))
        assert diffs[0].key == "n=5 length"

    def test_discrepancy_text(self):
        d = Discrepancy("table1", "n=3 s", "2", "3")
        assert str(d) == "table1 n=3 s: printed 2, computed 3"


class TestReproduce:
    def test_table1_matches(self, cache):
        rep = reproduce_table1(cache)
        assert rep.diffs == ()
        assert not rep.failed
        assert rep.rows[0] == ("L_2(2)", "2·3", "2")

    def test_table2_mandatory_rows_match(self, cache):
        rep = reproduce_table2(11, cache)
        assert rep.diffs == ()
        assert all(row[2] == "yes" and row[3] == "yes" for row in rep.rows)

    def test_table2_full_range_does_not_fail(self, cache):
        rep = reproduce_table2(20, cache)
        assert not rep.failed
        assert all(not d.mandatory for d in rep.diffs)

    def test_table2_beyond_printed_rows(self, cache):
        rep = reproduce_table2(22, cache)
        assert "n=21: no printed row" in rep.notes
        assert rep.rows[-1][3] == "-"

    def test_table2_max_n(self):
        with pytest.raises(DomainError):
            reproduce_table2(1)

    def test_table3(self, cache):
        rep = reproduce_table3(cache)
        assert not rep.failed
        assert len(rep.rows) == 51
        assert "extra: L_2(127) 2^7·3^2·7·127" in rep.notes
        assert "label B_3(2) -> S_6(2)" in rep.notes

    @pytest.mark.parametrize("n", [3, 10, 11, 12, 20])
    def test_lemma_m(self, n, cache):
        rep = reproduce_lemma_m(n, cache)
        assert not rep.failed

    def test_lemma_m_sources(self, cache):
        assert reproduce_lemma_m(10, cache).rows[0] == (
            "10",
            "{7, 8, 9, 10}",
            "printed",
        )
        assert reproduce_lemma_m(14, cache).rows[0][2] == "closed form"

    def test_mersenne(self):
        rep = reproduce_mersenne(127)
        assert [row[0] for row in rep.rows][-3:] == ["89", "107", "127"]
        assert rep.diffs == ()

    def test_aut_check(self, cache):
        rep = reproduce_aut_check(5, cache)
        assert not rep.failed
        assert [row[0] for row in rep.rows] == ["Aut(L_5(2))", "Aut(L_6(2))"]
        assert rep.rows[0][3] == "31"
        assert rep.rows[0][4] == "2^4·3^2·5"

    @pytest.mark.parametrize("p", [2, 4, 11])
    def test_aut_check_domain(self, p):
        with pytest.raises(DomainError):
            reproduce_aut_check(p)


class TestRendering:
    def test_table_is_deterministic(self, cache):
        rep = reproduce_table1(cache)
        assert render_table(rep) == render_table(reproduce_table1(cache))
        text = render_table(rep)
        assert "L_10(2)" in text
        assert text.rstrip().endswith("no differences")
        assert "\x1b" not in text

    def test_no_diff_lines_without_differences(self):
        rep = reproduce_lemma_m(10)
        assert "DIFF" not in render_table(rep)

    def test_structured(self, cache):
        data = json.loads(render(reproduce_table1(cache), "structured"))
        assert data["failed"] is False
        assert data["rows"][0] == {"G": "L_2(2)", "|G|": "2·3", "s(G)": "2"}
