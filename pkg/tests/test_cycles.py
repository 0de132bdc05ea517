from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given
from strategies import graphs

from circlab.budget import Budget
from circlab.cycles import (
    COUNT_MAX,
    checked_count,
    circumference,
    count_cliques,
    count_cycles,
    count_cycles_through,
    has_cycle_at_least,
    has_cycle_through_at_least,
    is_spanning_subgraph,
    oracle_count_cycles,
)
from circlab.enumeration import EnumerationFilter, enumerate_graphs
from circlab.errors import BudgetExceeded, CountOverflowError, DomainError
from circlab.families import h_graph
from circlab.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    path_graph,
    petersen_graph,
)


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return graph_from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _brute_cliques(g: Graph, s: int) -> int:
    return sum(all(g.has_edge(u, v) for u, v in combinations(c, 2)) for c in combinations(range(g.n), s))


def _two_k5() -> Graph:
    edges = [(u, v) for b in (range(5), range(4, 9)) for u in b for v in b if u < v]
    return graph_from_edges(9, edges)


def test_circumference_examples():
    assert circumference(cycle_graph(7)) == 7
    assert circumference(h_graph(10, 7)) == 7
    assert circumference(petersen_graph()) == 9
    assert circumference(path_graph(6)) == 0
    assert circumference(empty_graph(0)) == 0
    assert circumference(_two_k5()) == 5


def test_has_cycle_at_least_examples():
    assert not has_cycle_at_least(cycle_graph(5), 6)
    assert not has_cycle_at_least(h_graph(12, 6), 7)
    assert has_cycle_at_least(complete_graph(6), 6)
    with pytest.raises(DomainError):
        has_cycle_at_least(cycle_graph(5), 2)


def test_count_cycles_examples():
    assert count_cycles(complete_graph(4), 3) == 4
    assert count_cycles(complete_graph(5), 5) == 12
    assert count_cycles(h_graph(9, 6), 5) == 90
    with pytest.raises(DomainError):
        count_cycles(complete_graph(4), 5)
    with pytest.raises(DomainError):
        count_cycles(complete_graph(4), 2)


def test_count_cycles_through_examples():
    c5 = cycle_graph(5)
    assert all(count_cycles_through(c5, v, 5) == 1 for v in range(5))
    assert all(count_cycles_through(complete_graph(4), v, 3) == 3 for v in range(4))
    h = h_graph(9, 6)
    per = [count_cycles_through(h, v, 5) for v in range(9)]
    assert sum(per) == 5 * 90
    assert per[0] == per[1] == per[2] and per[3] == per[8]


def test_count_cliques_examples():
    assert count_cliques(complete_graph(5), 3) == 10
    assert count_cliques(_two_k5(), 3) == 20
    assert count_cliques(cycle_graph(6), 3) == 0
    assert count_cliques(complete_graph(5), 1) == 5
    assert count_cliques(complete_graph(5), 6) == 0
    with pytest.raises(DomainError):
        count_cliques(complete_graph(3), 0)


def test_oracle_examples():
    assert oracle_count_cycles(cycle_graph(6), 6) == 1
    assert oracle_count_cycles(complete_graph(5), 4) == 15
    assert oracle_count_cycles(h_graph(8, 4), 4) == 15
    with pytest.raises(DomainError):
        oracle_count_cycles(empty_graph(17), 3)


def test_count_cycles_matches_oracle_on_all_small_graphs():
    for n in range(3, 7):
        for g in enumerate_graphs(EnumerationFilter(n)):
            for m in range(3, n + 1):
                assert count_cycles(g, m) == oracle_count_cycles(g, m)


def test_count_cycles_matches_oracle_on_sampled_graphs():
    rng = random.Random(20240601)
    for n in (7, 8, 9):
        for _ in range(6):
            g = _random_graph(rng, n, rng.choice([0.4, 0.6, 0.8]))
            for m in range(3, n + 1):
                assert count_cycles(g, m) == oracle_count_cycles(g, m)


@given(graphs(3, 9))
def test_circumference_agrees_with_cycle_counts(g):
    lengths = [m for m in range(3, g.n + 1) if count_cycles(g, m) > 0]
    c = circumference(g)
    assert c == max(lengths, default=0)
    for m in range(3, g.n + 2):
        assert has_cycle_at_least(g, m) == (c >= m)


@given(graphs(3, 8))
def test_cycles_through_sum_identity(g):
    for m in range(3, g.n + 1):
        total = sum(count_cycles_through(g, v, m) for v in range(g.n))
        assert total == m * count_cycles(g, m)


@given(graphs(3, 8))
def test_cycle_through_vertex_search(g):
    for v in range(g.n):
        for m in range(3, g.n + 1):
            expected = any(count_cycles_through(g, v, L) for L in range(m, g.n + 1))
            assert has_cycle_through_at_least(g, v, m) == expected


@given(graphs(0, 10))
def test_count_cliques_matches_brute_force(g):
    for s in range(1, 6):
        assert count_cliques(g, s) == _brute_cliques(g, s)


def test_checked_count_rejects_overflow():
    assert checked_count(COUNT_MAX) == COUNT_MAX
    with pytest.raises(CountOverflowError):
        checked_count(COUNT_MAX + 1)


def test_spanning_subgraph_examples():
    emb = is_spanning_subgraph(cycle_graph(4), complete_graph(4))
    assert emb is not None and emb.is_valid(cycle_graph(4), complete_graph(4))
    assert is_spanning_subgraph(complete_graph(4), cycle_graph(4)) is None
    h55 = h_graph(5, 5)
    emb = is_spanning_subgraph(cycle_graph(5), h55)
    assert emb is not None and emb.is_valid(cycle_graph(5), h55)
    with pytest.raises(DomainError):
        is_spanning_subgraph(cycle_graph(4), cycle_graph(5))


@given(graphs(1, 7), graphs(1, 7))
def test_spanning_subgraph_witnesses_are_valid(g, h):
    if g.n != h.n:
        return
    emb = is_spanning_subgraph(g, h)
    if emb is not None:
        assert emb.is_valid(g, h)
    # Every graph embeds into any supergraph of itself.
    sup = h.add_edges(g.edges())
    assert is_spanning_subgraph(g, sup) is not None


def test_is_spanning_subgraph_is_deterministic():
    g = cycle_graph(6)
    h = complete_graph(6)
    assert is_spanning_subgraph(g, h) == is_spanning_subgraph(g, h)


def test_budget_interrupts_long_search():
    g = complete_graph(12)
    with pytest.raises(BudgetExceeded):
        count_cycles(g, 12, Budget(deadline=0.0, stride=1))
    with pytest.raises(DomainError):
        Budget(0)
