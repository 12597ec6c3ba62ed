"""Exhaustive and random graph corpora for the verification suites.

``connected_graphs_g6`` enumerates every connected graph on n <= 7 vertices
up to isomorphism. Graphs on n labeled vertices are upper-triangle edge
bitmasks; scanning masks in ascending order and closing each unseen mask
under all vertex permutations visits every isomorphism class once, with
the class representative being its smallest mask. The permutation images
are computed with numpy over a precomputed bit-relabeling table, and a
byte-per-mask bitmap marks visited masks (n = 7 needs 2^21 of them).
Orders beyond 7 are out of reach for this scheme and are guarded.

``random_graphs`` draws a reproducible G(n, p) corpus from one seed.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .errors import ContractError
from .graphs import Graph, emit_graph6, is_connected

MAX_EXHAUSTIVE_ORDER = 7

# connected graphs on 1..7 vertices up to isomorphism (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _mask_to_graph(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@lru_cache(maxsize=None)
def connected_graphs_g6(n: int) -> tuple[str, ...]:
    """graph6 codes of all connected order-n graphs, one per isomorphism
    class, ordered by their minimal edge-mask representative."""
    if not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise ContractError(
            f"exhaustive enumeration supports 1..{MAX_EXHAUSTIVE_ORDER}, got {n}"
        )
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    pos = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    table = np.zeros((len(perms), m), dtype=np.uint32)
    for pi, perm in enumerate(perms):
        for (u, v), src in pos.items():
            a, b = perm[u], perm[v]
            table[pi, src] = 1 << pos[(a, b) if a < b else (b, a)]

    seen = bytearray(1 << m)
    out = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        if mask:
            cols = [i for i in range(m) if mask >> i & 1]
            images = np.bitwise_or.reduce(table[:, cols], axis=1)
            for img in np.unique(images).tolist():
                seen[img] = 1
        else:
            seen[0] = 1
        g = _mask_to_graph(n, pairs, mask)
        if is_connected(g):
            out.append(emit_graph6(g))
    return tuple(out)


def connected_stream(n_max: int) -> list[str]:
    """graph6 codes of every connected graph with 1 <= n <= n_max."""
    top = min(n_max, MAX_EXHAUSTIVE_ORDER)
    codes: list[str] = []
    for n in range(1, top + 1):
        codes.extend(connected_graphs_g6(n))
    return codes


def random_graphs(count: int, n_max: int, seed: int) -> list[Graph]:
    """A reproducible list of G(n, p) graphs, n uniform in 1..n_max."""
    if count < 0 or n_max < 1:
        raise ContractError("random corpus needs count >= 0 and n_max >= 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        p = rng.uniform(0.15, 0.85)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        out.append(Graph(n, edges))
    return out


def subseed(seed: int, index: int) -> int:
    """Stable per-item seed derivation for independent corpora."""
    return seed * 1_000_003 + index
