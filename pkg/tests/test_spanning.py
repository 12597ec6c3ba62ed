"""Spanning tree enumeration, extremal sweeps, and the subgraph laws."""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from domgame.errors import ContractError, GuardError
from domgame.families import make_spanning_pair, make_tree_family
from domgame.graphs import Graph, domination_number, parse_graph6
from domgame.smallgraphs import connected_graphs_g6
from domgame.solver import GameSolver, Mover, gamma_pair
from domgame.spanning import (
    enumerate_spanning_trees,
    spanning_extremes,
    verify_prop9,
)


def _complete(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


def _path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _kirchhoff_count(g: Graph) -> int:
    """Matrix-tree theorem: spanning trees = any cofactor of the Laplacian."""
    if g.n == 1:
        return 1
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges():
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    return round(np.linalg.det(lap[1:, 1:]))


# ---------------------------------------------------------------------------
# enumeration


def test_counts_against_matrix_tree_theorem():
    cases = [
        _complete(4),
        _complete(5),
        _cycle(6),
        Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]),
        make_spanning_pair("fig6")[0].graph,
    ]
    for n in range(2, 7):
        cases.extend(parse_graph6(c) for c in connected_graphs_g6(n)[:10])
    for g in cases:
        trees = list(enumerate_spanning_trees(g))
        assert len(trees) == _kirchhoff_count(g)
        assert len(set(trees)) == len(trees)
        for edges in trees:
            t = Graph(g.n, edges)
            assert len(edges) == g.n - 1
            assert all(g.has_edge(u, v) for u, v in edges)
            assert domination_number(t) >= 1  # connected by construction


def test_known_counts():
    assert len(list(enumerate_spanning_trees(_complete(4)))) == 16
    g, h = make_spanning_pair("starclique", m=2, n=3)
    assert g.graph is h.graph
    assert len(list(enumerate_spanning_trees(g.graph))) == 9
    assert list(enumerate_spanning_trees(_path(5))) == [tuple(_path(5).edges())]
    assert list(enumerate_spanning_trees(Graph(1, []))) == [()]


def test_cap_and_connectivity_guards():
    with pytest.raises(GuardError):
        list(enumerate_spanning_trees(_complete(5), cap=10))
    with pytest.raises(ContractError):
        list(enumerate_spanning_trees(Graph(4, [(0, 1), (2, 3)])))
    with pytest.raises(GuardError):
        list(enumerate_spanning_trees(Graph(25, [(i, i + 1) for i in range(24)])))


# ---------------------------------------------------------------------------
# extremal sweep


def test_extremes_on_a_tree_are_degenerate():
    t = make_tree_family("T", r=1).graph
    report = spanning_extremes(t)
    assert report.tree_count == 1
    assert report.min_tree == report.max_tree
    assert report.min_tree.value == 3
    assert report.base_gamma_g == 3 and report.base_gamma_g_prime == 4
    assert report.prop5_ok and report.gamma_preserving_tree_exists


def test_extremes_on_the_eight_vertex_pair():
    g, h = make_spanning_pair("fig6")
    report = spanning_extremes(g.graph)
    assert report.base_gamma == 3
    assert report.base_gamma_g == 4
    assert report.min_tree.value == 3
    assert report.gamma_preserving_tree_exists
    # the published tree (drop three chords) is among the enumerated minima
    t_edges = tuple(sorted(h.graph.edges()))
    trees = set(enumerate_spanning_trees(g.graph))
    assert t_edges in trees
    assert GameSolver(h.graph).value() == report.min_tree.value == 3


def test_starclique_every_tree_costs_more():
    g, _ = make_spanning_pair("starclique", m=4, n=3)
    report = spanning_extremes(g.graph)
    assert report.base_gamma_g == 5  # m + 1
    assert report.tree_count == 81
    assert report.min_tree.value >= 6  # 3m/2
    assert report.prop5_ok


def test_sweep_respects_cap():
    with pytest.raises(GuardError):
        spanning_extremes(_complete(6), cap=100)


# ---------------------------------------------------------------------------
# spanning subgraph laws


def test_prop9_lower_applicable():
    star = Graph(5, [(0, i) for i in range(1, 5)])
    report = verify_prop9(star, star)
    assert report.lower_applicable and report.lower_ok
    assert report.upper_applicable  # gamma = 1 makes both ends meet
    assert report.all_ok


def test_prop9_upper_applicable_on_p5():
    p5 = _path(5)
    assert gamma_pair(p5) == (3, 3)
    assert domination_number(p5) == 2
    same = verify_prop9(p5, p5)
    assert same.upper_applicable and same.upper_ok
    broken = Graph(5, [(0, 1), (2, 3), (3, 4)])  # spanning forest, gamma still 2
    report = verify_prop9(p5, broken)
    assert report.gamma_H == 2
    assert report.upper_applicable and report.upper_ok
    assert report.all_ok


def test_prop9_not_applicable_in_between():
    g, h = make_spanning_pair("fig6")
    report = verify_prop9(g.graph, h.graph)
    assert not report.lower_applicable and report.lower_ok is None
    assert not report.upper_applicable and report.upper_ok is None
    assert report.all_ok
    assert report.gamma_preserving_tree_exists


def test_prop9_rejects_non_subgraphs():
    p4 = _path(4)
    with pytest.raises(ContractError):
        verify_prop9(p4, _cycle(4))
    with pytest.raises(ContractError):
        verify_prop9(p4, _path(5))


def test_spanning_laws_hold_on_curated_hosts():
    hosts = [
        _complete(4),
        _complete(5),
        _cycle(5),
        _cycle(6),
        Graph(5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 1), (1, 2)]),
        Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                  (0, 3), (1, 4), (2, 5)]),  # prism
        make_spanning_pair("fig6")[0].graph,
        make_spanning_pair("houses", t=1)[0].graph,
    ]
    for g in hosts:
        gamma = domination_number(g)
        gg = GameSolver(g).value()
        ceiling = -(-(gg + 1) // 2)
        for edges in enumerate_spanning_trees(g):
            t = Graph(g.n, edges)
            assert domination_number(t) >= gamma
            pair = gamma_pair(t)
            assert pair[0] >= ceiling
            assert abs(pair[0] - pair[1]) <= 1


def test_staller_start_extremes_consistent():
    g = _cycle(6)
    report = spanning_extremes(g)
    solver = GameSolver(g)
    assert report.base_gamma_g == solver.value()
    assert report.base_gamma_g_prime == solver.value(mover=Mover.STALLER)
    assert report.min_tree.value <= report.max_tree.value
