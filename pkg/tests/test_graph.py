import pickle

import pytest
from hypothesis import given, strategies as st

from builders import complete, complete_bipartite, cycle, disjoint_cliques, empty
from critgraph.graph import (
    Graph,
    GraphError,
    PairKind,
    VertexPair,
    VertexSet,
    closed_neighborhood,
    complement,
    components,
    is_connected,
    open_neighborhood,
)
from oracles import adjacency_of, components as oracle_components
from strategies import graphs


def test_complement_of_k4_is_empty():
    assert complement(complete(4)) == empty(4)


def test_complement_of_c5_is_the_pentagram_cycle():
    expected = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert complement(cycle(5)) == expected


def test_complement_of_k23_splits_into_two_cliques():
    assert complement(complete_bipartite(2, 3)) == disjoint_cliques(2, 3)


def test_closed_neighborhood_examples():
    assert closed_neighborhood(cycle(5), {0}) == {4, 0, 1}
    assert closed_neighborhood(cycle(5), set()) == set()
    assert closed_neighborhood(complete(4), {2}) == {0, 1, 2, 3}


def test_open_neighborhood_excludes_the_set_unless_adjacent():
    assert open_neighborhood(cycle(5), {0}) == {1, 4}
    assert open_neighborhood(cycle(5), {0, 1}) == {0, 1, 2, 4}


def test_components_examples():
    assert components(disjoint_cliques(2, 2)) == [VertexSet({0, 1}), VertexSet({2, 3})]
    assert components(cycle(5)) == [VertexSet(range(5))]
    assert components(empty(3)) == [VertexSet({0}), VertexSet({1}), VertexSet({2})]


def test_vertex_pair_normalises_and_orders():
    p = VertexPair(3, 1)
    assert p.ends() == (1, 3)
    assert sorted([VertexPair(2, 3), VertexPair(0, 4), VertexPair(0, 1)])[0] == VertexPair(0, 1)
    assert VertexPair.of(cycle(5), 0, 2).kind is PairKind.MISSING
    assert VertexPair.of(cycle(5), 0, 1).kind is PairKind.EDGE
    with pytest.raises(GraphError):
        VertexPair(2, 2)


def test_edges_and_missing_edges_are_lexicographic():
    g = cycle(5)
    assert [e.ends() for e in g.edges()] == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert [e.ends() for e in g.missing_edges()] == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]


def test_constructor_rejects_bad_rows():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, [0b01, 0])  # loop
    with pytest.raises(GraphError):
        Graph(2, [0b100, 0])  # out of range
    with pytest.raises(GraphError):
        Graph.from_edges(513, [])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_graphs_are_immutable_values():
    g = cycle(4)
    with pytest.raises(AttributeError):
        g.n = 5
    h = g.add_edge(0, 2)
    assert not g.has_edge(0, 2) and h.has_edge(0, 2)
    assert h.remove_edge(0, 2) == g
    assert {g, cycle(4)} == {g}
    assert pickle.loads(pickle.dumps(g)) == g


def test_large_order_supported():
    g = Graph.from_edges(512, [(0, 511), (200, 300)])
    assert g.has_edge(511, 0) and g.num_edges == 2
    assert complement(complement(g)) == g


def test_induced_subgraph_relabels_in_order():
    g = cycle(5).delete_vertices({0})
    assert g == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_edge_counts_sum_to_all_pairs(g):
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@given(graphs(min_n=2), st.data())
def test_edits_keep_adjacency_symmetric(g, data):
    a = data.draw(st.integers(0, g.n - 1))
    b = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != a))
    for h in (g.add_edge(a, b), g.remove_edge(a, b)):
        Graph(h.n, h.rows)  # validating constructor re-checks every invariant


@given(graphs())
def test_components_match_set_based_search(g):
    expected = [sorted(c) for c in oracle_components(adjacency_of(g))]
    assert [sorted(c) for c in components(g)] == expected
    assert is_connected(g) == (g.n > 0 and len(expected) == 1)
