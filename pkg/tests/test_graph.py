from __future__ import annotations

import itertools

import pytest
from conftest import graphs
from hypothesis import given

from ectlab.errors import ContractViolation
from ectlab.generators import named_graph
from ectlab.graph import Graph, complete_graph, identify_vertices, is_complete


def test_edges_are_normalized_and_deduplicated():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.adjacent(1, 0) and g.adjacent(0, 1)
    assert not g.adjacent(0, 2)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_rejects_loops_and_out_of_range(edges):
    with pytest.raises(ContractViolation):
        Graph(3, edges)


def test_empty_graph_is_allowed():
    g = Graph(0)
    assert g.m == 0 and g.components() == []
    assert is_complete(g)


@given(graphs())
def test_adjacency_is_symmetric(g):
    for u, v in itertools.product(g.vertices(), repeat=2):
        assert g.adjacent(u, v) == g.adjacent(v, u)
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.m


def test_graph_is_hashable_and_immutable():
    g = Graph(2, [(0, 1)])
    assert hash(g) == hash(Graph(2, [(1, 0)]))
    with pytest.raises(AttributeError):
        g.n = 3


@pytest.mark.parametrize(
    "g, expected",
    [(complete_graph(4), True), (named_graph("P3"), False), (Graph(1), True)],
)
def test_is_complete(g, expected):
    assert is_complete(g) is expected


def test_identify_path_ends():
    assert identify_vertices(named_graph("P3"), 0, 2) == Graph(2, [(0, 1)])


def test_identify_c4_collapses_parallel_edges():
    # merged vertex stays in slot 0; vertex 3 shifts down to 2
    h = identify_vertices(named_graph("C4"), 0, 2)
    assert h == Graph(3, [(0, 1), (0, 2)])


def test_identify_split_k5_gives_k5():
    h = identify_vertices(named_graph("split-K5"), 4, 5)
    assert h == complete_graph(5)


def test_identify_relabeling_rule():
    g = Graph(6, [(1, 5), (3, 4)])
    h = identify_vertices(g, 3, 1)
    # 3 merges into slot 1, 4 -> 3, 5 -> 4
    assert h == Graph(5, [(1, 4), (1, 3)])


@pytest.mark.parametrize("u, v", [(0, 0), (0, 1), (0, 9)])
def test_identify_contract_violations(u, v):
    with pytest.raises(ContractViolation):
        identify_vertices(named_graph("C4"), u, v)


def _all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def test_identify_is_simple_exhaustively():
    """Every non-adjacent pair of every labeled graph with n <= 6."""
    checked = 0
    for n in range(2, 7):
        for g in _all_graphs(n) if n < 6 else itertools.islice(_all_graphs(6), 0, None, 7):
            for u, v in itertools.combinations(range(n), 2):
                if g.adjacent(u, v):
                    continue
                h = identify_vertices(g, u, v)
                assert h.n == n - 1
                assert h.m <= g.m
                assert all(a != b for a, b in h.edges)
                assert len(set(h.edges)) == h.m
                merged = set(g.neighbors(u)) | set(g.neighbors(v))
                shift = lambda x: x - 1 if x > max(u, v) else x  # noqa: E731
                assert set(h.neighbors(min(u, v))) == {shift(x) for x in merged}
                checked += 1
    assert checked > 10_000


@given(graphs(min_n=1))
def test_remove_vertex_and_edge(g):
    h = g.remove_vertex(0)
    assert h.n == g.n - 1 and h.m == g.m - g.degree(0)
    for u, v in g.edges:
        assert g.remove_edge(u, v).m == g.m - 1


def test_components():
    g = Graph(5, [(0, 3), (1, 2)])
    assert g.components() == [[0, 3], [1, 2], [4]]
