"""Deterministic generators for the graph families used by the lab.

Tree families (``make_tree_family``):

* ``caterpillar(s, t)``: a spine path on t vertices with s-1 leaves hanging
  off every spine vertex, order s*t. For s >= t+1 its game domination
  number is 2t-1.
* ``T(r)``: a hub w joined to the middle vertex b_i of r five-vertex
  caterpillar gadgets (path a_i-b_i-c_i plus a leaf on a_i and on c_i),
  order 5r+1. Realizes (3r, 3r+1).
* ``T_prime(r)``: T(r) with a pendant path w-y-z, order 5r+3. Realizes
  (3r+1, 3r+2).
* ``T_dprime(r)``: T(r) with two pendant paths b_1-p-q and b_1-m-n, order
  5r+5. Realizes (3r+2, 3r+3).

Spanning pairs (``make_spanning_pair``) return (G, H) with H a spanning
subgraph of G on the same vertex numbering:

* ``houses(t)``: t five-vertex house blocks (a 5-cycle with one chord)
  amalgamated at a cut vertex x; H drops one roof edge per block so each
  block hangs on a triangle. gamma_g(H_t) = t+1 while gamma_g(G_t) grows
  like 3t/2.
* ``layered3conn(m)``: m cliques of order m+2 glued along a 2m-clique hub,
  plus a sparse matching between the clique tops; 3-connected, and dropping
  the matching leaves a 2-connected H with gamma_g(H_m) = m versus
  gamma_g(G_m) >= 2m-2. Requires m >= 3.
* ``starclique(m, n)``: a star whose m leaves are each identified with a
  vertex of a clique of order n, order n*m+1. Returned as (G, G): the
  interesting comparison is against its spanning trees, every one of which
  has game domination number at least 3m/2 while gamma_g(G) = m+1.
* ``web(k)``: a tree T_k (hub x over 5k independent vertices, hub y feeding
  k disjoint five-vertex paths, x adjacent to y) and its supergraph G_k
  with the 5k rungs x_i^j-y_i^j added. gamma_g(G_k) >= 5k/2 - 1 while
  gamma_g(T_k) <= 2k+3. Returned as (G_k, T_k).
* ``fig6``: a fixed 8-vertex graph whose minimum spanning tree value drops
  below the host value (gamma_g(G) >= 4, gamma_g(T) = 3).

Partially dominated fixtures (``make_partial_fixture``): P3' (path of order
3, one leaf dominated), P5' (path of order 5, center dominated), and F (the
order-9 subtree of T_dprime(1) left by cutting the w-b_1 bridge, with b_1
dominated). Their value pairs are (1,2), (3,3) and (5,5).

All generators are pure: the same parameters always produce the same vertex
numbering, edge order and labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractError
from .graphs import DominationState, Graph, Mover

TREE_FAMILIES = ("caterpillar", "T", "T_prime", "T_dprime")
PAIR_FAMILIES = ("houses", "layered3conn", "starclique", "web", "fig6")
FIXTURES = ("P3'", "P5'", "F")


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, int]
    family: str
    params: dict[str, int]

    def __post_init__(self):
        seen = set()
        for name, v in self.labels.items():
            if not 0 <= v < self.graph.n:
                raise ContractError(f"label {name} points at missing vertex {v}")
            if v in seen:
                raise ContractError(f"label {name} reuses vertex {v}")
            seen.add(v)


@dataclass(frozen=True)
class PartialFixture:
    name: str
    state: DominationState
    labels: dict[str, int] = field(default_factory=dict)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ContractError(message)


# ---------------------------------------------------------------------------
# tree families


def _caterpillar(s: int, t: int) -> LabeledGraph:
    _require(s >= 2, f"caterpillar needs s >= 2, got s={s}")
    _require(t >= 1, f"caterpillar needs t >= 1, got t={t}")
    edges = [(i, i + 1) for i in range(t - 1)]
    labels = {}
    for j in range(t):
        labels[f"spine_{j + 1}"] = j
        base = t + j * (s - 1)
        edges.extend((j, base + k) for k in range(s - 1))
    return LabeledGraph(Graph(s * t, edges), labels, "caterpillar", {"s": s, "t": t})


def _gadget_tree(r: int) -> tuple[list[tuple[int, int]], dict[str, int]]:
    """Edges and labels of T(r): hub 0, gadget triples, then the leaves."""
    edges = []
    labels = {"w": 0}
    for i in range(1, r + 1):
        a, b, c = 3 * i - 2, 3 * i - 1, 3 * i
        la = 3 * r + 2 * i - 1
        lc = 3 * r + 2 * i
        labels[f"a_{i}"] = a
        labels[f"b_{i}"] = b
        labels[f"c_{i}"] = c
        edges.extend([(0, b), (a, b), (b, c), (a, la), (c, lc)])
    return edges, labels


def _tree_T(r: int) -> LabeledGraph:
    _require(r >= 1, f"T needs r >= 1, got r={r}")
    edges, labels = _gadget_tree(r)
    return LabeledGraph(Graph(5 * r + 1, edges), labels, "T", {"r": r})


def _tree_T_prime(r: int) -> LabeledGraph:
    _require(r >= 1, f"T_prime needs r >= 1, got r={r}")
    edges, labels = _gadget_tree(r)
    y, z = 5 * r + 1, 5 * r + 2
    edges.extend([(0, y), (y, z)])
    labels.update(y=y, z=z)
    return LabeledGraph(Graph(5 * r + 3, edges), labels, "T_prime", {"r": r})


def _tree_T_dprime(r: int) -> LabeledGraph:
    _require(r >= 1, f"T_dprime needs r >= 1, got r={r}")
    edges, labels = _gadget_tree(r)
    b1 = labels["b_1"]
    p, q, m, n = 5 * r + 1, 5 * r + 2, 5 * r + 3, 5 * r + 4
    edges.extend([(b1, p), (p, q), (b1, m), (m, n)])
    labels.update(p=p, q=q, m=m, n=n)
    return LabeledGraph(Graph(5 * r + 5, edges), labels, "T_dprime", {"r": r})


def make_tree_family(name: str, **params: int) -> LabeledGraph:
    if name == "caterpillar":
        return _caterpillar(**_take(params, "caterpillar", "s", "t"))
    if name == "T":
        return _tree_T(**_take(params, "T", "r"))
    if name == "T_prime":
        return _tree_T_prime(**_take(params, "T_prime", "r"))
    if name == "T_dprime":
        return _tree_T_dprime(**_take(params, "T_dprime", "r"))
    raise ContractError(f"unknown tree family {name!r}; expected one of {TREE_FAMILIES}")


def _take(params: dict[str, int], family: str, *names: str) -> dict[str, int]:
    extra = set(params) - set(names)
    missing = set(names) - set(params)
    if extra:
        raise ContractError(f"{family} does not take {sorted(extra)}")
    if missing:
        raise ContractError(f"{family} needs {sorted(missing)}")
    for k, v in params.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise ContractError(f"{family} parameter {k} must be an integer")
    return params


# ---------------------------------------------------------------------------
# spanning pairs


def _houses(t: int) -> tuple[LabeledGraph, LabeledGraph]:
    _require(t >= 1, f"houses needs t >= 1, got t={t}")
    n = 4 * t + 1
    labels = {"x": 0}
    g_edges = []
    h_edges = []
    for i in range(t):
        p1, p2, p3, p4 = 4 * i + 1, 4 * i + 2, 4 * i + 3, 4 * i + 4
        labels[f"p_{i + 1}_1"] = p1
        labels[f"p_{i + 1}_4"] = p4
        block = [(0, p1), (p1, p2), (p2, p3), (0, p4), (p1, p3)]
        h_edges.extend(block)
        g_edges.extend(block + [(p4, p3)])
    params = {"t": t}
    return (
        LabeledGraph(Graph(n, g_edges), labels, "houses", params),
        LabeledGraph(Graph(n, h_edges), dict(labels), "houses", params),
    )


def _clique_edges(members: list[int]) -> list[tuple[int, int]]:
    return [
        (min(members[p], members[q]), max(members[p], members[q]))
        for p in range(len(members))
        for q in range(p + 1, len(members))
    ]


def _layered3conn(m: int) -> tuple[LabeledGraph, LabeledGraph]:
    _require(m >= 3, f"layered3conn needs m >= 3, got m={m}")
    n = m * (m + 2)
    labels = {}
    hub = []
    for i in range(1, m + 1):
        labels[f"x_{i}"] = 2 * (i - 1)
        labels[f"y_{i}"] = 2 * (i - 1) + 1
        hub.extend([2 * (i - 1), 2 * (i - 1) + 1])

    def a(i: int, j: int) -> int:
        return 2 * m + (i - 1) * m + (j - 1)

    shared = set(_clique_edges(hub))
    for i in range(1, m + 1):
        block = [labels[f"x_{i}"], labels[f"y_{i}"]] + [a(i, j) for j in range(1, m + 1)]
        shared.update(_clique_edges(block))
        labels[f"a_{i}_1"] = a(i, 1)
    matching = [
        (a(i, j), a(j + 1, i)) for i in range(1, m) for j in range(i, m)
    ]
    params = {"m": m}
    g = LabeledGraph(Graph(n, sorted(shared) + matching), labels, "layered3conn", params)
    h = LabeledGraph(Graph(n, sorted(shared)), dict(labels), "layered3conn", params)
    return g, h


def _starclique(m: int, n: int) -> tuple[LabeledGraph, LabeledGraph]:
    _require(m >= 2, f"starclique needs m >= 2, got m={m}")
    _require(n >= 3, f"starclique needs n >= 3, got n={n}")
    order = n * m + 1
    labels = {"x": 0}
    edges = []
    for i in range(1, m + 1):
        v = i
        labels[f"v_{i}"] = v
        rest = [m + 1 + (i - 1) * (n - 1) + k for k in range(n - 1)]
        edges.append((0, v))
        edges.extend(_clique_edges([v] + rest))
    g = LabeledGraph(Graph(order, edges), labels, "starclique", {"m": m, "n": n})
    return g, g


def _web(k: int) -> tuple[LabeledGraph, LabeledGraph]:
    _require(k >= 1, f"web needs k >= 1, got k={k}")
    order = 10 * k + 2
    labels = {"x": 0, "y": 1}

    def xv(i: int, j: int) -> int:
        return 2 + 5 * (i - 1) + (j - 1)

    def yv(i: int, j: int) -> int:
        return 2 + 5 * k + 5 * (i - 1) + (j - 1)

    tree = [(0, 1)]
    for i in range(1, k + 1):
        labels[f"x_{i}_1"] = xv(i, 1)
        labels[f"y_{i}_1"] = yv(i, 1)
        tree.extend((0, xv(i, j)) for j in range(1, 6))
        tree.append((1, yv(i, 1)))
        tree.extend((yv(i, j), yv(i, j + 1)) for j in range(1, 5))
    rungs = [(xv(i, j), yv(i, j)) for i in range(1, k + 1) for j in range(1, 6)]
    params = {"k": k}
    g = LabeledGraph(Graph(order, tree + rungs), labels, "web", params)
    t = LabeledGraph(Graph(order, tree), dict(labels), "web", params)
    return g, t


_FIG6_G = [(0, 1), (0, 4), (1, 2), (1, 3), (1, 5), (2, 6), (3, 7), (4, 5), (5, 6), (6, 7)]
_FIG6_T = [(0, 1), (1, 2), (1, 3), (1, 5), (4, 5), (5, 6), (6, 7)]


def _fig6() -> tuple[LabeledGraph, LabeledGraph]:
    labels = {f"v_{i + 1}": i for i in range(8)}
    g = LabeledGraph(Graph(8, _FIG6_G), labels, "fig6", {})
    t = LabeledGraph(Graph(8, _FIG6_T), dict(labels), "fig6", {})
    return g, t


def make_spanning_pair(name: str, **params: int) -> tuple[LabeledGraph, LabeledGraph]:
    """(G, H) where H is a spanning subgraph of G under the same numbering."""
    if name == "houses":
        return _houses(**_take(params, "houses", "t"))
    if name == "layered3conn":
        return _layered3conn(**_take(params, "layered3conn", "m"))
    if name == "starclique":
        return _starclique(**_take(params, "starclique", "m", "n"))
    if name == "web":
        return _web(**_take(params, "web", "k"))
    if name == "fig6":
        _take(params, "fig6")
        return _fig6()
    raise ContractError(f"unknown spanning pair {name!r}; expected one of {PAIR_FAMILIES}")


# ---------------------------------------------------------------------------
# partially dominated fixtures


def _normalize_fixture(name: str) -> str:
    key = (
        name.strip()
        .lower()
        .replace("'", "")
        .replace("prime", "")
        .replace("_", "")
        .replace("-", "")
        .rstrip("p")
    )
    if key == "p3":
        return "P3'"
    if key == "p5":
        return "P5'"
    if name.strip().upper() == "F" or key == "f":
        return "F"
    raise ContractError(f"unknown fixture {name!r}; expected one of {FIXTURES}")


def make_partial_fixture(name: str) -> PartialFixture:
    """A named partially dominated state, Dominator to move."""
    canon = _normalize_fixture(name)
    if canon == "P3'":
        g = Graph(3, [(0, 1), (1, 2)])
        return PartialFixture("P3'", DominationState(g, 1 << 0, Mover.DOMINATOR))
    if canon == "P5'":
        g = Graph(5, [(i, i + 1) for i in range(4)])
        return PartialFixture("P5'", DominationState(g, 1 << 2, Mover.DOMINATOR))
    host = _tree_T_dprime(1)
    b1 = host.labels["b_1"]
    w = host.labels["w"]
    keep = sorted(v for v in range(host.graph.n) if v != w)
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u, v in host.graph.edges()
        if u != w and v != w
    ]
    g = Graph(len(keep), edges)
    labels = {"b_1": index[b1]}
    return PartialFixture("F", DominationState(g, 1 << index[b1], Mover.DOMINATOR), labels)
