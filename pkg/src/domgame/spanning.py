"""Spanning-tree sweeps: extremal game values and spanning-subgraph laws.

``enumerate_spanning_trees`` walks every spanning tree of a connected graph
exactly once by branching on each edge in turn: include it unless that
closes a cycle, exclude it unless the remaining edges can no longer span
the graph. Both branches are pruned, so the recursion tree has one leaf
per spanning tree and the cap guard is a true bound on work.

``spanning_extremes`` solves the game on every spanning tree and reports
the extremes, together with two spanning-subgraph laws checked along the
way: every spanning subgraph H of G satisfies
gamma_g(H) >= ceil((gamma_g(G)+1)/2), and for small graphs a spanning tree
with the host's domination number must exist.

``verify_prop9`` checks the sharper pair of laws at the extremal values of
gamma_g: when gamma_g(G) = gamma(G) every spanning subgraph H has
gamma_g(H) >= gamma_g(G); when gamma_g(G) = 2*gamma(G) - 1 and H keeps the
domination number, gamma_g(H) <= gamma_g(G). When the hypotheses fail the
report marks the law not applicable instead of asserting anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ContractError, GuardError
from .graphs import Graph, Mover, domination_number, is_connected
from .solver import GameSolver

SPANNING_CAP = 100_000
MAX_SPANNING_ORDER = 24
GAMMA_TREE_ORDER_LIMIT = 12

EdgeSet = tuple[tuple[int, int], ...]


def enumerate_spanning_trees(graph: Graph, cap: int = SPANNING_CAP) -> Iterator[EdgeSet]:
    """Yield each spanning tree of a connected graph once, as sorted edges."""
    if graph.n > MAX_SPANNING_ORDER:
        raise GuardError(
            f"spanning enumeration limited to {MAX_SPANNING_ORDER} vertices, got {graph.n}"
        )
    if not is_connected(graph):
        raise ContractError("spanning trees require a connected graph")
    n = graph.n
    if n <= 1:
        yield ()
        return
    edges = graph.edges()
    m = len(edges)
    yielded = 0

    def spans(chosen: list[tuple[int, int]], pos: int) -> bool:
        """Can chosen + edges[pos:] still connect everything?"""
        adj = [0] * n
        for u, v in chosen:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        for u, v in edges[pos:]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            low = frontier
            while low:
                bit = low & -low
                nxt |= adj[bit.bit_length() - 1]
                low ^= bit
            frontier = nxt & ~seen
            seen |= nxt
        return seen == graph.full

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def rec(pos: int, parent: list[int], chosen: list[tuple[int, int]]):
        nonlocal yielded
        if len(chosen) == n - 1:
            yielded += 1
            if yielded > cap:
                raise GuardError(f"spanning tree cap {cap} exceeded")
            yield tuple(chosen)
            return
        # invariant: chosen + edges[pos:] spans, so pos < m here
        u, v = edges[pos]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            child = list(parent)
            child[ru] = rv
            chosen.append((u, v))
            yield from rec(pos + 1, child, chosen)
            chosen.pop()
        if spans(chosen, pos + 1):
            yield from rec(pos + 1, parent, chosen)

    yield from rec(0, list(range(n)), [])


@dataclass(frozen=True)
class TreeExtreme:
    value: int
    edges: EdgeSet


@dataclass(frozen=True)
class SpanningReport:
    order: int
    base_gamma: int
    base_gamma_g: int
    base_gamma_g_prime: int
    tree_count: int
    min_tree: TreeExtreme
    max_tree: TreeExtreme
    prop5_ok: bool
    gamma_preserving_tree_exists: bool | None


def spanning_extremes(graph: Graph, cap: int = SPANNING_CAP) -> SpanningReport:
    """Solve the game on every spanning tree and report the extremes.

    ``gamma_preserving_tree_exists`` is only computed for orders up to
    GAMMA_TREE_ORDER_LIMIT; above that it is None.
    """
    solver = GameSolver(graph)
    base_gg = solver.value()
    base_ggp = solver.value(mover=Mover.STALLER)
    base_gamma = domination_number(graph)
    check_gamma = graph.n <= GAMMA_TREE_ORDER_LIMIT
    gamma_preserving = False if check_gamma else None

    count = 0
    best: tuple[int, EdgeSet] | None = None
    worst: tuple[int, EdgeSet] | None = None
    for tree_edges in enumerate_spanning_trees(graph, cap):
        count += 1
        tree = Graph(graph.n, tree_edges)
        value = GameSolver(tree).value()
        if best is None or (value, tree_edges) < best:
            best = (value, tree_edges)
        if worst is None or value > worst[0] or (value == worst[0] and tree_edges < worst[1]):
            worst = (value, tree_edges)
        if check_gamma and not gamma_preserving:
            if domination_number(tree) == base_gamma:
                gamma_preserving = True
    assert best is not None and worst is not None
    ceiling = -(-(base_gg + 1) // 2)
    return SpanningReport(
        order=graph.n,
        base_gamma=base_gamma,
        base_gamma_g=base_gg,
        base_gamma_g_prime=base_ggp,
        tree_count=count,
        min_tree=TreeExtreme(*best),
        max_tree=TreeExtreme(*worst),
        prop5_ok=best[0] >= ceiling,
        gamma_preserving_tree_exists=gamma_preserving,
    )


@dataclass(frozen=True)
class Prop9Report:
    gamma_G: int
    gamma_H: int
    gamma_g_G: int
    gamma_g_H: int
    lower_applicable: bool
    lower_ok: bool | None
    upper_applicable: bool
    upper_ok: bool | None
    gamma_preserving_tree_exists: bool | None

    @property
    def all_ok(self) -> bool:
        return self.lower_ok is not False and self.upper_ok is not False


def verify_prop9(g: Graph, h: Graph) -> Prop9Report:
    """Check the extremal spanning-subgraph laws for H inside G."""
    if h.n != g.n:
        raise ContractError("H must have the same vertex set as G")
    for u, v in h.edges():
        if not g.has_edge(u, v):
            raise ContractError(f"H edge ({u}, {v}) is not an edge of G")
    gamma_G = domination_number(g)
    gamma_H = domination_number(h)
    gg_G = GameSolver(g).value()
    gg_H = GameSolver(h).value()
    lower_app = gg_G == gamma_G
    upper_app = gg_G == 2 * gamma_G - 1 and gamma_H == gamma_G
    preserving: bool | None = None
    if g.n <= GAMMA_TREE_ORDER_LIMIT and is_connected(g):
        preserving = any(
            domination_number(Graph(g.n, t)) == gamma_G
            for t in enumerate_spanning_trees(g)
        )
    return Prop9Report(
        gamma_G=gamma_G,
        gamma_H=gamma_H,
        gamma_g_G=gg_G,
        gamma_g_H=gg_H,
        lower_applicable=lower_app,
        lower_ok=(gg_H >= gg_G) if lower_app else None,
        upper_applicable=upper_app,
        upper_ok=(gg_H <= gg_G) if upper_app else None,
        gamma_preserving_tree_exists=preserving,
    )
