"""
Pytest definition and custom assertions for gkod tests.

This file provides pytest fixtures and custom assertion methods that are
available to all test files automatically.
"""

from pathlib import Path
from typing import Dict, Sequence, Tuple

import pytest
from click.testing import CliRunner

from gkod.const import FACTOR_CACHE_ENV
from gkod.factor import FactorCache, bundled_cache
from gkod.gkgraph import PrimeGraph, build_gk_Ln2, degree_pattern


class GraphAssertion:
    """Custom assertion class for PrimeGraph objects with fluent interface."""

    def __init__(self, graph: PrimeGraph):
        self.graph = graph

    def has_vertices(self, expected: Sequence[int]) -> "GraphAssertion":
        assert self.graph.vertices == tuple(
            expected
        ), f"Expected vertices {tuple(expected)}, got {self.graph.vertices}"
        return self

    def has_pattern(self, expected: Sequence[int]) -> "GraphAssertion":
        actual = degree_pattern(self.graph).degrees
        assert actual == tuple(
            expected
        ), f"Expected degree pattern {tuple(expected)}, got {actual}"
        return self

    def has_edge(self, a: int, b: int) -> "GraphAssertion":
        assert self.graph.adjacent(a, b), f"Expected edge {a} -- {b}"
        return self

    def lacks_edge(self, a: int, b: int) -> "GraphAssertion":
        assert not self.graph.adjacent(a, b), f"Unexpected edge {a} -- {b}"
        return self

    def has_labels(self, expected: Dict[int, int]) -> "GraphAssertion":
        for p, k in expected.items():
            assert (
                self.graph.labels.get(p) == k
            ), f"Expected label k={k} on {p}, got {self.graph.labels.get(p)}"
        return self


@pytest.fixture
def assert_graph():
    """
    Returns a function that wraps a PrimeGraph in a GraphAssertion.

    Usage:
        def test_graph(assert_graph):
            assert_graph(build_gk_Ln2(5)).has_pattern((2, 3, 1, 2, 0))
    """

    def _assert_graph(graph: PrimeGraph) -> GraphAssertion:
        return GraphAssertion(graph)

    return _assert_graph


# Common test fixtures


@pytest.fixture(scope="session")
def cache() -> FactorCache:
    """The bundled factor table for 2^k - 1, k <= 127."""
    return bundled_cache()


@pytest.fixture
def gk10() -> PrimeGraph:
    return build_gk_Ln2(10)


@pytest.fixture
def gk5() -> PrimeGraph:
    return build_gk_Ln2(5)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def isolated_settings(tmp_path, monkeypatch) -> Tuple[str, ...]:
    """
    Global CLI arguments that read settings from an empty directory and
    ignore $GK_FACTOR_CACHE, so user configuration cannot leak into tests.
    """
    settings_dir = tmp_path / "settings"
    settings_dir.mkdir()
    monkeypatch.delenv(FACTOR_CACHE_ENV, raising=False)
    return ("--config-dir", str(settings_dir))


@pytest.fixture
def cache_file(tmp_path) -> Path:
    """A small factor cache written to disk."""
    path = tmp_path / "factors.txt"
    path.write_text(
        "# test cache\n2 3^1\n3 7^1\n6 3^2 7^1\n11 23^1 89^1\n",
        encoding="ascii",
        newline="\n",
    )
    return path
