"""Bitmask graph core for the domination game.

Vertices are integers 0..n-1 and vertex sets are plain Python ints used as
bitmasks, so n is capped at 64 to keep every set a machine word. A Graph is
immutable after construction and safe to share between threads and processes.

Two interchange formats are supported:

* graph6, header-less, as used by gtools/nauty. The word starts with N(n)
  (one byte ``n+63`` for n <= 62, or ``~`` followed by three bytes for
  63 <= n <= 64) and packs the upper triangle of the adjacency matrix in
  column order x(0,1), x(0,2), x(1,2), x(0,3), ... six bits per byte, each
  byte offset by 63. Parse errors name the byte offset.
* a plain edge list: first line ``n m``, then m lines ``u v`` with 0-indexed
  endpoints. Blank lines and lines starting with ``#`` are ignored, which
  lets emitted files carry label comments. Parse errors name the line number.

The domination-game state built on top of a Graph is a (graph, dominated
set, mover) triple. ``residual`` reduces such a state: vertices whose whole
closed neighborhood is dominated can never be worth playing and are removed,
and edges between two dominated vertices no longer influence play.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ContractError, FormatError

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(bits(mask))


class Graph:
    """Immutable simple graph on vertices 0..n-1 backed by adjacency masks."""

    __slots__ = ("n", "adj", "closed", "full")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ContractError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ContractError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.closed = tuple(a | (1 << v) for v, a in enumerate(adj))
        self.full = (1 << n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for k in bits(rest):
                out.append((u, u + 1 + k))
        return out

    def size(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size()})"

    def __reduce__(self):
        return (Graph, (self.n, tuple(self.edges())))


class Mover(enum.Enum):
    """Whose turn it is. Dominator minimizes game length, Staller maximizes."""

    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def opponent(self) -> "Mover":
        return Mover.STALLER if self is Mover.DOMINATOR else Mover.DOMINATOR


@dataclass(frozen=True)
class DominationState:
    """A partially dominated graph with a player to move."""

    graph: Graph
    dominated: int = 0
    mover: Mover = Mover.DOMINATOR

    def __post_init__(self):
        if self.dominated & ~self.graph.full:
            raise ContractError("dominated mask names vertices outside the graph")
        if not isinstance(self.mover, Mover):
            raise ContractError(f"mover must be a Mover, got {self.mover!r}")


@dataclass(frozen=True)
class ResidualGraph:
    """Reduced state: ``origin_map[i]`` is the source vertex behind new index i."""

    graph: Graph
    dominated: int
    origin_map: tuple[int, ...]

    def as_state(self, mover: Mover = Mover.DOMINATOR) -> DominationState:
        return DominationState(self.graph, self.dominated, mover)


def closed_neighborhood(graph: Graph, v: int) -> int:
    if not 0 <= v < graph.n:
        raise ContractError(f"vertex {v} out of range for n={graph.n}")
    return graph.closed[v]


# ---------------------------------------------------------------------------
# graph6


def _g6_bytes(text: str) -> bytes:
    data = text.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"invalid graph6 byte 0x{b:02x} at offset {i}")
    return data


def parse_graph6(text: str) -> Graph:
    """Decode one header-less graph6 word into a Graph.

    Accepts graphs on at most 64 vertices; anything larger is rejected even
    when the word itself is well formed.
    """
    text = text.strip()
    if not text:
        raise FormatError("empty graph6 input at offset 0")
    data = _g6_bytes(text)
    if data[0] == 126:  # '~': multi-byte vertex count
        if len(data) >= 2 and data[1] == 126:
            raise FormatError("vertex count beyond 64 at offset 1")
        if len(data) < 4:
            raise FormatError(f"truncated vertex count at offset {len(data)}")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body_at = 4
    else:
        n = data[0] - 63
        body_at = 1
    if n > MAX_VERTICES:
        raise FormatError(f"vertex count {n} beyond {MAX_VERTICES} at offset 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(data) - body_at
    if have < need:
        raise FormatError(f"truncated edge section at offset {len(data)}")
    if have > need:
        raise FormatError(f"trailing bytes at offset {body_at + need}")
    edges = []
    k = 0
    u, v = 0, 1
    for i in range(need):
        group = data[body_at + i] - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if group >> shift & 1:
                    raise FormatError(f"nonzero padding at offset {body_at + i}")
                continue
            if group >> shift & 1:
                edges.append((u, v))
            k += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def emit_graph6(graph: Graph) -> str:
    """Encode a Graph as one header-less graph6 word."""
    n = graph.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    nbits = n * (n - 1) // 2
    out = bytearray(head)
    group, have = 0, 0
    for v in range(1, n):
        col = graph.adj[v]
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            have += 1
            if have == 6:
                out.append(group + 63)
                group, have = 0, 0
    if have:
        out.append((group << (6 - have)) + 63)
    assert len(out) == len(head) + (nbits + 5) // 6
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# edge lists


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped text) for non-blank, non-comment lines."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by m ``u v`` lines, 0-indexed endpoints."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list at line 1")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise FormatError(f"expected 'n m' header at line {lineno}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"non-integer header at line {lineno}") from None
    if not 0 <= n <= MAX_VERTICES:
        raise FormatError(f"vertex count {n} outside 0..{MAX_VERTICES} at line {lineno}")
    if m < 0:
        raise FormatError(f"negative edge count at line {lineno}")
    body = lines[1:]
    if len(body) < m:
        last = body[-1][0] if body else lineno
        raise FormatError(f"expected {m} edges, found {len(body)}: input ends at line {last}")
    if len(body) > m:
        raise FormatError(f"unexpected extra line {body[m][0]}")
    edges = []
    seen = set()
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v' at line {lineno}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer endpoint at line {lineno}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range at line {lineno}")
        if u == v:
            raise FormatError(f"self-loop at line {lineno}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge at line {lineno}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.size()}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def load_graph_text(text: str) -> Graph:
    """Parse graph text in either supported format.

    An explicit ``g6:`` prefix forces graph6. Otherwise the first content
    line decides: two integers mean an edge list, anything else is tried as
    a graph6 word.
    """
    if text.startswith("g6:"):
        return parse_graph6(text[3:])
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty graph input at line 1")
    head = lines[0][1].split()
    if len(head) == 2 and all(p.lstrip("-").isdigit() for p in head):
        return parse_edge_list(text)
    if len(lines) > 1:
        raise FormatError(f"unexpected extra line {lines[1][0]} after graph6 word")
    return parse_graph6(lines[0][1])


# ---------------------------------------------------------------------------
# state reduction and statistics


def saturated_mask(graph: Graph, dominated: int) -> int:
    """Vertices whose closed neighborhood is entirely dominated."""
    out = 0
    for v in range(graph.n):
        if graph.closed[v] & ~dominated == 0:
            out |= 1 << v
    return out


def residual(state: DominationState) -> ResidualGraph:
    """Prune a state down to the part that can still influence the game.

    Removes saturated vertices (playing them or dominating them again is
    worthless) and edges joining two dominated vertices. The remaining
    vertices keep their relative order; dominated-but-unsaturated vertices
    stay and stay marked. The game value of the reduced state equals the
    value of the original.
    """
    g = state.graph
    sat = saturated_mask(g, state.dominated)
    keep = bit_list(g.full & ~sat)
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    for u, v in g.edges():
        if (1 << u) & sat or (1 << v) & sat:
            continue
        if state.dominated >> u & 1 and state.dominated >> v & 1:
            continue
        edges.append((index[u], index[v]))
    reduced = Graph(len(keep), edges)
    dom = mask_of(index[v] for v in keep if state.dominated >> v & 1)
    return ResidualGraph(reduced, dom, tuple(keep))


@dataclass(frozen=True)
class GraphStats:
    order: int
    size: int
    max_degree: int
    is_connected: bool
    is_tree: bool


def _component_mask(graph: Graph, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= graph.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def is_connected(graph: Graph) -> bool:
    if graph.n <= 1:
        return True
    return _component_mask(graph, 0) == graph.full


def component_count(graph: Graph) -> int:
    rest = graph.full
    count = 0
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= ~_component_mask(graph, v)
        count += 1
    return count


def is_forest(graph: Graph) -> bool:
    return graph.size() == graph.n - component_count(graph)


def graph_stats(graph: Graph) -> GraphStats:
    m = graph.size()
    conn = is_connected(graph)
    return GraphStats(
        order=graph.n,
        size=m,
        max_degree=max((graph.degree(v) for v in range(graph.n)), default=0),
        is_connected=conn,
        is_tree=conn and graph.n >= 1 and m == graph.n - 1,
    )


# ---------------------------------------------------------------------------
# exact domination number


def domination_number(graph: Graph) -> int:
    """Size of a minimum dominating set, by branch and bound over set cover.

    Branches on an undominated vertex with the fewest closed-neighborhood
    covers; prunes with the ceiling bound undominated/(max cover size) and a
    greedy upper bound. Exact for every graph this package accepts.
    """
    full = graph.full
    if full == 0:
        return 0
    closed = graph.closed
    maxcover = max(c.bit_count() for c in closed)

    dom, ub = 0, 0
    while dom != full:
        best_v = max(range(graph.n), key=lambda v: ((closed[v] & ~dom).bit_count(), -v))
        dom |= closed[best_v]
        ub += 1

    best = ub

    def dfs(dom: int, size: int) -> None:
        nonlocal best
        undom = full & ~dom
        if not undom:
            if size < best:
                best = size
            return
        if size + -(-undom.bit_count() // maxcover) >= best:
            return
        u = min(bits(undom), key=lambda w: (closed[w].bit_count(), w))
        cands = sorted(bits(closed[u]), key=lambda v: (-(closed[v] & undom).bit_count(), v))
        for v in cands:
            dfs(dom | closed[v], size + 1)

    dfs(0, 0)
    return best
