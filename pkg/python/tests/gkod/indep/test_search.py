"""Tests for exact independence numbers and their oracles."""

from itertools import combinations

import pytest

from gkod.errors import DomainError
from gkod.gkgraph import PrimeGraph, build_gk_Ln2
from gkod.indep import (
    alpha_cliques,
    alpha_exact,
    alpha_exhaustive,
    t2,
    verify_independent,
)
from tests.gkod.fixtures import complete_graph, edgeless_graph, random_graphs


class TestAlphaExact:
    def test_L10(self, gk10):
        result = alpha_exact(gk10)
        assert result.size == 4
        assert result.witness == (5, 11, 73, 127)
        assert verify_independent(gk10, (11, 17, 73, 127))

    def test_L10_witness_is_the_smallest_maximum_set(self, gk10):
        maximum = [
            s
            for s in combinations(gk10.vertices, 4)
            if verify_independent(gk10, s)
        ]
        assert (11, 17, 73, 127) in maximum
        assert alpha_exact(gk10).witness == min(maximum)

    def test_L5(self, gk5):
        assert tuple(alpha_exact(gk5)) == (3, (2, 5, 31))

    def test_complete_graph(self):
        assert tuple(alpha_exact(complete_graph(range(2, 10)))) == (1, (2,))

    def test_edgeless_graph(self):
        g = edgeless_graph((2, 3, 5, 7))
        assert tuple(alpha_exact(g)) == (4, (2, 3, 5, 7))

    def test_empty_graph(self):
        assert alpha_exact(PrimeGraph(vertices=())).size == 0

    def test_too_many_vertices(self):
        with pytest.raises(DomainError):
            alpha_exact(edgeless_graph(range(2, 100)))


class TestT2:
    def test_L10(self, gk10):
        assert tuple(t2(gk10)) == (3, (2, 11, 73))

    def test_witness_contains_two(self, cache):
        for n in range(2, 21):
            g = build_gk_Ln2(n, cache)
            result = t2(g)
            assert result.witness[0] == 2
            assert verify_independent(g, result.witness)
            assert result.size <= alpha_exact(g).size

    def test_needs_vertex_two(self):
        with pytest.raises(DomainError):
            t2(edgeless_graph((3, 5)))


class TestOracles:
    @pytest.mark.parametrize("n", range(2, 15))
    def test_agree_on_prime_graphs(self, n, cache):
        g = build_gk_Ln2(n, cache)
        expected = alpha_exact(g)
        assert alpha_exhaustive(g) == expected
        assert alpha_cliques(g) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(15, 21))
    def test_agree_on_larger_prime_graphs(self, n, cache):
        g = build_gk_Ln2(n, cache)
        expected = alpha_exact(g)
        assert alpha_exhaustive(g) == expected
        assert alpha_cliques(g) == expected

    def test_agree_on_random_graphs(self):
        for g in random_graphs(20):
            expected = alpha_exact(g)
            assert alpha_exhaustive(g) == expected, g.edge_list()
            assert alpha_cliques(g) == expected, g.edge_list()
            assert verify_independent(g, expected.witness)

    @pytest.mark.slow
    def test_agree_on_many_random_graphs(self):
        for g in random_graphs(200, seed=7):
            expected = alpha_exact(g)
            assert alpha_exhaustive(g) == expected, g.edge_list()
            assert alpha_cliques(g) == expected, g.edge_list()

    def test_exhaustive_vertex_limit(self):
        with pytest.raises(DomainError):
            alpha_exhaustive(edgeless_graph(range(2, 30)))

    def test_cliques_on_empty_graph(self):
        assert alpha_cliques(PrimeGraph(vertices=())).size == 0
