from __future__ import annotations

from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given
from strategies import graphs, graphs_with_perm

from circlab.enumeration import EnumerationFilter, enumerate_graphs
from circlab.errors import CapacityError, DomainError, Graph6Error
from circlab.graph import (
    Graph,
    blocks,
    canonical_code,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    is_two_connected,
    join,
    parse_graph6,
    path_graph,
    star_graph,
    union_all,
    write_graph6,
)
from circlab.families import h_graph


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph_from_edges_examples():
    tri = graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert tri.num_edges() == 3
    assert graph_from_edges(4, []).min_degree() == 0
    c5 = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5.degrees() == [2] * 5
    assert graph_from_edges(3, [(0, 1), (1, 0), (0, 1)]).num_edges() == 1


def test_graph_from_edges_errors():
    with pytest.raises(DomainError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(DomainError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(CapacityError):
        graph_from_edges(65, [])
    assert graph_from_edges(100, [(0, 99)], cap=128).num_edges() == 1
    with pytest.raises(CapacityError):
        graph_from_edges(129, [], cap=128)


def test_constructor_rejects_asymmetric_adjacency():
    with pytest.raises(DomainError):
        Graph(2, (0b10, 0))
    with pytest.raises(DomainError):
        Graph(2, (0b01, 0))
    with pytest.raises(DomainError):
        Graph(2, (0b100, 0))


def test_union_and_join_examples():
    k3 = complete_graph(3)
    two = disjoint_union(k3, k3)
    assert (two.n, two.num_edges(), len(two.components())) == (6, 6, 2)
    assert disjoint_union(k3, empty_graph(0)) == k3
    assert union_all([complete_graph(2)] * 4).n == 8
    wheel = join(complete_graph(1), cycle_graph(4))
    assert wheel.num_edges() == 8
    h2 = join(complete_graph(2), union_all([complete_graph(2)] * 3))
    assert h2.min_degree() == 3


@given(graphs(0, 6), graphs(0, 6))
def test_join_edge_count(g, h):
    j = join(g, h)
    assert j.num_edges() == g.num_edges() + h.num_edges() + g.n * h.n
    u = disjoint_union(g, h)
    assert u.num_edges() == g.num_edges() + h.num_edges()


@given(graphs(0, 9))
def test_adjacency_is_symmetric_and_loop_free(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        assert g.adj[v] >> g.n == 0
        for u in g.neighbors(v):
            assert g.has_edge(u, v)


def test_degree_examples():
    assert cycle_graph(5).min_degree() == 2
    assert h_graph(10, 6).min_degree() == 3
    g = join(complete_graph(2), disjoint_union(star_graph(3), complete_graph(2)))
    assert g.min_degree() == 3
    with pytest.raises(DomainError):
        empty_graph(0).min_degree()
    with pytest.raises(DomainError):
        cycle_graph(4).degree(4)


def test_two_connectivity_examples():
    assert is_two_connected(cycle_graph(5))
    bowtie = graph_from_edges(7, [(u, v) for b in ((0, 1, 2, 3), (3, 4, 5, 6)) for u in b for v in b if u < v])
    assert not is_two_connected(bowtie)
    bl, cuts = blocks(bowtie)
    assert sorted(sorted(b) for b in bl) == [[0, 1, 2, 3], [3, 4, 5, 6]]
    assert cuts == [3]
    for n in range(6, 12):
        assert is_two_connected(h_graph(n, 5))
    assert not is_two_connected(complete_graph(2))
    assert not is_two_connected(path_graph(4))


@given(graphs(0, 9))
def test_blocks_match_networkx(g):
    h = _to_nx(g)
    bl, cuts = blocks(g)
    ours = sorted(sorted(b) for b in bl if len(b) >= 2)
    theirs = sorted(sorted(c) for c in nx.biconnected_components(h))
    assert ours == theirs
    assert cuts == sorted(nx.articulation_points(h))
    expected = g.n >= 3 and nx.is_connected(h) and not cuts
    assert is_two_connected(g) == expected


def test_canonical_code_examples():
    c4a = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    c4b = graph_from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_code(c4a) == canonical_code(c4b)
    assert canonical_code(c4a) != canonical_code(path_graph(4))
    diamond = complete_graph(4).remove_edges([(0, 1)])
    codes = {canonical_code(diamond.relabel(p)) for p in permutations(range(4))}
    assert len(codes) == 1
    with pytest.raises(CapacityError):
        canonical_code(cycle_graph(11))


@given(graphs_with_perm(1, 8))
def test_canonical_code_is_relabelling_invariant(pair):
    g, perm = pair
    assert canonical_code(g) == canonical_code(g.relabel(perm))


@given(graphs(1, 7), graphs(1, 7))
def test_canonical_code_separates_classes(g, h):
    same = g.n == h.n and nx.is_isomorphic(_to_nx(g), _to_nx(h))
    assert (canonical_code(g) == canonical_code(h)) == same


def test_graph6_examples():
    assert write_graph6(complete_graph(1)) == "@"
    assert write_graph6(empty_graph(0)) == "?"
    g = parse_graph6("D?{")
    assert g.n == 5 and write_graph6(g) == "D?{"
    assert parse_graph6(">>graph6<<D?{") == g
    big = path_graph(63)
    text = write_graph6(big)
    assert text.startswith("~??~")
    assert parse_graph6(text) == big


@given(graphs(0, 12))
def test_graph6_matches_reference_encoder(g):
    text = write_graph6(g)
    assert text == nx.to_graph6_bytes(_to_nx(g), header=False).decode().strip()
    assert parse_graph6(text) == g


def test_graph6_round_trip_on_enumerated_graphs():
    for n in range(1, 8):
        for g in enumerate_graphs(EnumerationFilter(n)):
            assert parse_graph6(write_graph6(g)) == g


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("D?{ ", 3),
        ("D?", 1),
        ("D?{{", 1),
        ("Ba", 1),  # n=2 has one bit; the padding bits must be zero
        ("~?", 0),
        (">>graph6<<", 10),
    ],
)
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert err.value.offset == offset
    assert "offset" in str(err.value)
