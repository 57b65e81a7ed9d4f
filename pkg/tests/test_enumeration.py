import io

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from builders import complete_bipartite, cycle, graphs_of_order, path
from critgraph.canon import canonical_labeling, orbits
from critgraph.enumeration import (
    KNOWN_COUNTS,
    canonical_form,
    deduplicate,
    generate_all,
    read_graph6_stream,
)
from critgraph.errors import CapabilityError
from critgraph.graph import Graph, complement
from critgraph.graph6 import Graph6Error, graph6_encode
import oracles
from strategies import graphs


def test_canonical_form_examples():
    c5 = cycle(5)
    assert canonical_form(c5.relabel([3, 0, 4, 1, 2])) == canonical_form(c5)
    assert canonical_form(c5) != canonical_form(path(5))
    k23 = complete_bipartite(2, 3)
    assert canonical_form(k23.relabel([4, 2, 0, 1, 3])) == canonical_form(k23)


def test_canonical_form_refuses_large_graphs():
    with pytest.raises(CapabilityError):
        canonical_form(cycle(13))


@given(graphs(max_n=10), st.data())
def test_canonical_form_is_invariant(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_separates_non_isomorphic_graphs(g, h):
    same = canonical_form(g) == canonical_form(h)
    iso = g.n == h.n and nx.is_isomorphic(
        nx.from_graph6_bytes(graph6_encode(g)), nx.from_graph6_bytes(graph6_encode(h))
    )
    assert same == iso


@given(graphs(max_n=7))
def test_generators_generate_the_full_automorphism_group(g):
    res = canonical_labeling(g.rows, g.n)
    for perm in res.generators:
        assert g.relabel(perm) == g
    edges = [e.ends() for e in g.edges()]
    assert oracles.group_order(g.n, res.generators) == oracles.automorphism_count(g.n, edges)


def test_orbits_of_a_path():
    res = canonical_labeling(path(5).rows, 5)
    assert orbits(5, res.generators) == [0, 1, 2, 1, 0]


def test_small_counts():
    assert len(list(generate_all(1))) == 1
    assert len(list(generate_all(4))) == 11


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_known_sequence(n):
    assert len(graphs_of_order(n)) == KNOWN_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_labelled_brute_force(n):
    assert len(graphs_of_order(n)) == oracles.labelled_class_count(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_generated_graphs_are_pairwise_non_isomorphic(n):
    forms = {canonical_form(g) for g in graphs_of_order(n)}
    assert len(forms) == len(graphs_of_order(n))


def test_generation_is_deterministic_and_restartable():
    s = generate_all(6)
    first = list(s)
    assert list(s) == first
    assert list(generate_all(6)) == first
    assert s.source == "generated:6" and s.count_hint == 156


def test_generation_order_range():
    with pytest.raises(ValueError):
        generate_all(0)
    with pytest.raises(ValueError):
        generate_all(11)


def test_complements_of_a_full_order_are_a_full_order():
    forms = {canonical_form(g) for g in graphs_of_order(6)}
    assert {canonical_form(complement(g)) for g in graphs_of_order(6)} == forms


def test_read_stream_examples(tmp_path):
    p = tmp_path / "g.g6"
    p.write_bytes(b"C~\nC?\n")
    s = read_graph6_stream(p)
    got = list(s)
    assert [g.num_edges for g in got] == [6, 0] and all(g.n == 4 for g in got)
    assert s.source.startswith("file:")

    p.write_bytes(b"")
    assert list(read_graph6_stream(p)) == []

    p.write_bytes(b"C~\nZZZ!\n")
    with pytest.raises(Graph6Error) as err:
        list(read_graph6_stream(p))
    assert err.value.line == 2


def test_read_stream_from_handle_skips_blank_lines():
    gs = list(read_graph6_stream(io.BytesIO(b"Dhc\n\nC~\n")))
    assert gs == [cycle(5), Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])]


def test_deduplicate_keeps_first_representative():
    c5 = cycle(5)
    out = list(deduplicate([c5, c5.relabel([1, 2, 3, 4, 0]), path(5), c5]))
    assert out == [c5, path(5)]
