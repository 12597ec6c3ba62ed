"""Exhaustive corpus against the networkx atlas, plus random corpus hygiene."""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from domgame.errors import ContractError
from domgame.graphs import graph_stats, parse_graph6
from domgame.smallgraphs import (
    CONNECTED_COUNTS,
    connected_graphs_g6,
    connected_stream,
    random_graphs,
    subseed,
)


def test_counts_match_frozen_table():
    for n, expected in CONNECTED_COUNTS.items():
        assert len(connected_graphs_g6(n)) == expected


def test_counts_match_networkx_atlas():
    atlas = nx.graph_atlas_g()[1:]  # entry 0 is the empty placeholder
    per_order = {n: 0 for n in range(1, 8)}
    for g in atlas:
        if g.number_of_nodes() >= 1 and nx.is_connected(g):
            per_order[g.number_of_nodes()] += 1
    assert per_order == CONNECTED_COUNTS


def test_codes_parse_connected_and_distinct():
    for n in range(1, 8):
        codes = connected_graphs_g6(n)
        assert len(set(codes)) == len(codes)
        for code in codes:
            g = parse_graph6(code)
            assert g.n == n
            assert graph_stats(g).is_connected


def test_no_isomorphic_duplicates_up_to_6():
    for n in range(2, 7):
        graphs = []
        for code in connected_graphs_g6(n):
            g = parse_graph6(code)
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(g.edges())
            graphs.append(h)
        for a, b in combinations(graphs, 2):
            assert not nx.is_isomorphic(a, b)


def test_enumeration_is_deterministic():
    connected_graphs_g6.cache_clear()
    first = connected_graphs_g6(5)
    connected_graphs_g6.cache_clear()
    assert connected_graphs_g6(5) == first


def test_stream_concatenates_orders():
    stream = connected_stream(4)
    assert len(stream) == 1 + 1 + 2 + 6
    assert stream[: len(connected_graphs_g6(1))] == list(connected_graphs_g6(1))
    assert len(connected_stream(9)) == sum(CONNECTED_COUNTS.values())


def test_enumeration_guards():
    with pytest.raises(ContractError):
        connected_graphs_g6(8)
    with pytest.raises(ContractError):
        connected_graphs_g6(0)


def test_random_corpus_reproducible():
    a = random_graphs(40, 9, seed=7)
    b = random_graphs(40, 9, seed=7)
    assert len(a) == 40
    assert [(g.n, g.edges()) for g in a] == [(g.n, g.edges()) for g in b]
    c = random_graphs(40, 9, seed=8)
    assert [(g.n, g.edges()) for g in a] != [(g.n, g.edges()) for g in c]


def test_random_corpus_bounds():
    for g in random_graphs(120, 6, seed=3):
        assert 1 <= g.n <= 6
    assert random_graphs(0, 5, seed=1) == []
    with pytest.raises(ContractError):
        random_graphs(5, 0, seed=1)


def test_subseed_is_injective_for_small_indices():
    seeds = {subseed(s, i) for s in range(3) for i in range(500)}
    assert len(seeds) == 3 * 500
