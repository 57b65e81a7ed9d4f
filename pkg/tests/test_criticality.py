import pytest
from hypothesis import given, strategies as st

from builders import complete, complete_bipartite, cycle, disjoint_cliques, graphs_of_order
from critgraph.criticality import (
    FOUR_SUPERCRITICAL,
    NOT_DIAMETER2_CRITICAL,
    STAR_COMPLEMENT,
    ArrowWitness,
    CaseKind,
    CriticalClass,
    CriticalKind,
    arrow,
    arrow_witnesses,
    classify_complement,
    is_3gt_critical_raw,
    is_diameter_d_edge_critical,
    is_k_gt_edge_critical,
    is_k_supercritical,
    missing_edge_case,
    quasi_edges,
    supercritical_characterization,
)
from critgraph.graph import Graph, GraphError, VertexPair, complement
from critgraph.metrics import diameter
import oracles
from strategies import graphs


def pairs(*ends):
    return [VertexPair(a, b) for a, b in ends]


def test_diameter_edge_critical_examples():
    assert is_diameter_d_edge_critical(cycle(4), 2)
    assert is_diameter_d_edge_critical(complete(4), 1)
    assert is_diameter_d_edge_critical(cycle(5), 2)
    assert not is_diameter_d_edge_critical(cycle(6), 2)
    assert is_diameter_d_edge_critical(cycle(7), 3)


def test_arrow_examples():
    assert arrow(cycle(5), 0, 4, 2)
    assert arrow(cycle(5), 0, 1, 3)
    assert not arrow(cycle(5), 0, 1, 2)
    with pytest.raises(GraphError):
        arrow(cycle(5), 0, 0, 2)


def test_gt_critical_examples():
    assert is_k_gt_edge_critical(cycle(5), 3)
    assert not is_k_gt_edge_critical(complete(4), 2)
    assert not is_k_gt_edge_critical(disjoint_cliques(2, 2), 3)


def test_supercritical_examples():
    assert is_k_supercritical(disjoint_cliques(3, 3), 4)
    assert is_k_supercritical(disjoint_cliques(2, 2), 4)
    assert not is_k_supercritical(cycle(4), 4)


@pytest.mark.parametrize("g", [disjoint_cliques(3, 5), cycle(5), disjoint_cliques(1, 4)])
def test_supercritical_characterization_examples(g):
    assert supercritical_characterization(g)


def test_classification_examples():
    assert classify_complement(complete_bipartite(1, 4)) == STAR_COMPLEMENT
    assert classify_complement(cycle(4)) == FOUR_SUPERCRITICAL
    assert classify_complement(cycle(5)) == CriticalClass(CriticalKind.THREE_GT_CRITICAL, 2)
    assert str(classify_complement(cycle(5))) == "ThreeGtCritical(diam=2)"
    assert classify_complement(cycle(6)) == NOT_DIAMETER2_CRITICAL


def test_critical_class_diameter_tag_validated():
    with pytest.raises(ValueError):
        CriticalClass(CriticalKind.THREE_GT_CRITICAL, 4)
    with pytest.raises(ValueError):
        CriticalClass(CriticalKind.STAR_COMPLEMENT, 2)


def test_quasi_edge_examples():
    g = cycle(5)
    assert quasi_edges(g, (0, 2)) == pairs((0, 4), (2, 3))
    assert quasi_edges(g, (1, 3)) == pairs((0, 1), (3, 4))
    assert quasi_edges(g, (1, 4)) == pairs((1, 2), (3, 4))
    with pytest.raises(GraphError):
        quasi_edges(g, (0, 1))


def test_missing_edge_case_on_c5_is_dominates_all():
    # every non-adjacent pair of C5 closed-dominates it, so the first branch applies;
    # the arrow witnesses still exist and are reported in order
    g = cycle(5)
    for e in g.missing_edges():
        assert missing_edge_case(g, e).kind is CaseKind.DOMINATES_ALL
    assert arrow_witnesses(g, (0, 2))[0] == ArrowWitness(0, 4, 2)
    assert arrow_witnesses(g, (0, 3))[0] == ArrowWitness(0, 1, 3)


def test_missing_edge_case_reports_arrow_when_pair_does_not_dominate():
    for g in graphs_of_order(6):
        if not is_3gt_critical_raw(g.rows, g.n):
            continue
        for e in g.missing_edges():
            case = missing_edge_case(g, e)
            if case.kind is CaseKind.ARROW:
                w = case.witness
                assert arrow(g, w.x, w.y, w.w)
                assert w.w in e and ({w.x, w.y} & {e.u, e.v})
                return
    pytest.fail("no arrow case among 3-γt-critical graphs of order 6")


def test_missing_edge_case_violation_on_non_critical_graph():
    # edgeless: {0, 1} misses vertex 2 and there is no edge to witness an arrow
    g = Graph.from_edges(3, [])
    assert missing_edge_case(g, (0, 1)).kind is CaseKind.VIOLATION


@pytest.mark.parametrize("n", range(2, 7))
def test_predicates_match_oracles_exhaustively(n):
    for g in graphs_of_order(n):
        adj = oracles.adjacency_of(g)
        assert is_diameter_d_edge_critical(g, 2) == oracles.is_diameter_d_critical(adj, 2), g
        assert is_k_gt_edge_critical(g, 3) == oracles.is_k_gt_critical(adj, 3), g
        assert is_k_supercritical(g, 4) == oracles.is_k_supercritical(adj, 4), g


@pytest.mark.parametrize("n", range(3, 8))
def test_quasi_edges_match_definition_on_critical_graphs(n):
    for g in graphs_of_order(n):
        if not is_3gt_critical_raw(g.rows, g.n):
            continue
        adj = oracles.adjacency_of(g)
        for e in g.missing_edges():
            got = [q.ends() for q in quasi_edges(g, e)]
            assert got == oracles.quasi_edges(adj, e.u, e.v)


@given(graphs(min_n=3, max_n=8), st.data())
def test_quasi_edges_touch_the_missing_edge(g, data):
    ms = g.missing_edges()
    if not ms:
        return
    e = data.draw(st.sampled_from(ms))
    for q in quasi_edges(g, e):
        assert g.has_edge(q.u, q.v)
        assert {q.u, q.v} & {e.u, e.v}
        assert q.ends() != e.ends()


@given(graphs(min_n=3, max_n=8))
def test_arrow_gives_quasi_edge_of_both_missing_pairs(g):
    for e in g.edges():
        for w in range(g.n):
            if w in e or not arrow(g, e.u, e.v, w):
                continue
            assert e in quasi_edges(g, (e.u, w))
            assert e in quasi_edges(g, (e.v, w))


@given(graphs(min_n=3, max_n=8))
def test_three_gt_critical_implies_diameter_two_or_three(g):
    if is_k_gt_edge_critical(g, 3):
        assert 2 <= diameter(g) <= 3


@given(graphs(min_n=2, max_n=8))
def test_classification_matches_complement_side(g):
    cls = classify_complement(g)
    h = complement(g)
    assert cls.positive == is_diameter_d_edge_critical(g, 2)
    if cls.kind is CriticalKind.THREE_GT_CRITICAL:
        assert is_k_gt_edge_critical(h, 3) and diameter(h) == cls.diam
