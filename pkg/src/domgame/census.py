"""Exhaustive census of game domination values over free trees.

``enumerate_trees`` generates every unlabeled tree of a given order exactly
once, via the constant-amortized-time level-sequence scheme of Wright,
Richmond, Odlyzko and McKay: a rooted tree is encoded as the sequence of
vertex depths in preorder, the successor function walks canonical
sequences, and a split test keeps exactly one rooted representative per
free tree. The enumeration order is deterministic, so the i-th tree of
order n is a stable identifier across runs and worker counts.

``pair_census`` solves (gamma_g, gamma_g') for every tree of an order and
groups the results by value pair. Records carry up to ``witness_cap``
graph6 codes, always the earliest trees in enumeration order, which keeps
the output byte-identical no matter how many worker processes solve the
trees. Worker pools use the spawn start method; solving is pure CPU work
and the tasks are tiny graph6 strings.

``conjecture_check`` scans for trees realizing a pair of the form
(k, k-1). None are known; finding one would be a discovery, so the scan
reports hits instead of raising. ``lower_bound_check`` confirms
gamma_g(T) >= ceil(2n/(max_degree+3)) - 1 on every tree of an order.

JSONL persistence: one record per line via ``CensusRecord.json_line``, a
plain-text manifest of completed orders next to it. Both are append-only
so long runs can resume at order granularity.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import ContractError, GuardError
from .graphs import Graph, emit_graph6, parse_graph6
from .solver import gamma_pair

MAX_CENSUS_ORDER = 16
MAX_TREE_ORDER = 20
WITNESS_CAP = 4
POOL_MIN_TASKS = 64
MANIFEST_SUFFIX = ".manifest"


# ---------------------------------------------------------------------------
# free tree enumeration (WROM level sequences)


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical level sequence, or None when exhausted."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Level sequences of the first root subtree and of the remainder."""
    m = len(seq)
    seen_one = False
    for i, lev in enumerate(seq):
        if lev == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [seq[i] - 1 for i in range(1, m)]
    rest = [0] + seq[m:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    """Advance to the nearest sequence that canonically encodes a free tree."""
    left, rest = _split(candidate)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    succ = _next_rooted(candidate, len(left))
    if succ is None:
        return None
    if candidate[len(left)] > 2:
        new_left, _ = _split(succ)
        tail = list(range(1, max(new_left) + 2))
        succ[len(succ) - len(tail):] = tail
    return succ


def _levels_to_graph(seq: list[int]) -> Graph:
    """Preorder depth sequence to a tree; vertex i's parent is the nearest
    earlier vertex one level up."""
    edges = []
    stack: list[int] = []
    for i, lev in enumerate(seq):
        if stack:
            while seq[stack[-1]] >= lev:
                stack.pop()
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph(len(seq), edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All unlabeled trees of order n, each exactly once, fixed order."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ContractError(f"tree order {n} outside 1..{MAX_TREE_ORDER}")
    if n == 1:
        yield Graph(1)
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is None:
            return
        yield _levels_to_graph(seq)
        seq = _next_rooted(seq)


def tree_codes(n: int) -> list[str]:
    """graph6 codes of enumerate_trees(n), the census task list."""
    return [emit_graph6(t) for t in enumerate_trees(n)]


# ---------------------------------------------------------------------------
# parallel solving


def _pair_worker(task: tuple[int, str]) -> tuple[int, int, int]:
    idx, code = task
    gg, ggp = gamma_pair(parse_graph6(code))
    return idx, gg, ggp


def _solve_codes(
    codes: list[str], workers: int, pool=None
) -> list[tuple[int, int, int]]:
    """(index, gamma_g, gamma_g') per code, always in index order."""
    tasks = list(enumerate(codes))
    if pool is not None:
        return list(pool.map(_pair_worker, tasks, chunksize=_chunk(len(tasks), workers)))
    if workers > 1 and len(tasks) >= POOL_MIN_TASKS:
        ctx = multiprocessing.get_context("spawn")
        with ctx.Pool(workers) as own:
            return list(own.map(_pair_worker, tasks, chunksize=_chunk(len(tasks), workers)))
    return [_pair_worker(t) for t in tasks]


def _chunk(n_tasks: int, workers: int) -> int:
    return max(1, n_tasks // (max(workers, 1) * 4))


def _guard_order(n: int, allow_large: bool) -> None:
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ContractError(f"census order {n} outside 1..{MAX_TREE_ORDER}")
    if n > MAX_CENSUS_ORDER and not allow_large:
        raise GuardError(
            f"census order {n} exceeds the guard at {MAX_CENSUS_ORDER}; "
            "pass allow_large to accept the cost"
        )


# ---------------------------------------------------------------------------
# census records


@dataclass(frozen=True)
class CensusRecord:
    n: int
    gamma_g: int
    gamma_g_prime: int
    count: int
    witnesses: tuple[str, ...]

    def json_line(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "gg": self.gamma_g,
                "ggp": self.gamma_g_prime,
                "count": self.count,
                "witnesses": list(self.witnesses),
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json_line(cls, line: str) -> "CensusRecord":
        o = json.loads(line)
        return cls(o["n"], o["gg"], o["ggp"], o["count"], tuple(o["witnesses"]))


def pair_census(
    n: int,
    workers: int = 1,
    *,
    allow_large: bool = False,
    witness_cap: int = WITNESS_CAP,
    _pool=None,
) -> list[CensusRecord]:
    """Group every tree of order n by its (gamma_g, gamma_g') pair.

    Records are sorted by pair; counts over all records sum to the number
    of trees of order n. Output does not depend on ``workers``.
    """
    _guard_order(n, allow_large)
    codes = tree_codes(n)
    results = _solve_codes(codes, workers, pool=_pool)
    groups: dict[tuple[int, int], list] = {}
    for idx, gg, ggp in results:
        bucket = groups.setdefault((gg, ggp), [0, []])
        bucket[0] += 1
        if len(bucket[1]) < witness_cap:
            bucket[1].append(codes[idx])
    return [
        CensusRecord(n, gg, ggp, count, tuple(wit))
        for (gg, ggp), (count, wit) in sorted(groups.items())
    ]


def census_orders(
    orders: list[int],
    workers: int = 1,
    *,
    allow_large: bool = False,
    witness_cap: int = WITNESS_CAP,
) -> list[tuple[int, int, list[CensusRecord]]]:
    """pair_census over several orders sharing one worker pool.

    Returns (order, tree count, records) triples in the requested order.
    """
    for n in orders:
        _guard_order(n, allow_large)
    pool = None
    ctx = None
    try:
        if workers > 1 and any(len(tree_codes_cached(n)) >= POOL_MIN_TASKS for n in orders):
            ctx = multiprocessing.get_context("spawn")
            pool = ctx.Pool(workers)
        out = []
        for n in orders:
            codes = tree_codes_cached(n)
            use_pool = pool if len(codes) >= POOL_MIN_TASKS else None
            records = pair_census(
                n, workers, allow_large=allow_large, witness_cap=witness_cap, _pool=use_pool
            )
            out.append((n, len(codes), records))
        return out
    finally:
        if pool is not None:
            pool.close()
            pool.join()


_code_cache: dict[int, list[str]] = {}


def tree_codes_cached(n: int) -> list[str]:
    if n not in _code_cache:
        _code_cache[n] = tree_codes(n)
        while len(_code_cache) > 8:
            _code_cache.pop(next(iter(_code_cache)))
    return _code_cache[n]


# ---------------------------------------------------------------------------
# scans


@dataclass(frozen=True)
class TreeFinding:
    n: int
    code: str
    gamma_g: int
    gamma_g_prime: int


@dataclass(frozen=True)
class ConjectureReport:
    n_max: int
    trees_checked: int
    counterexamples: tuple[TreeFinding, ...]

    @property
    def clean(self) -> bool:
        return not self.counterexamples


def conjecture_check(
    n_max: int, workers: int = 1, *, allow_large: bool = False
) -> ConjectureReport:
    """Scan all trees of order <= n_max for a (k, k-1) value pair.

    A hit is a finding to report, not an error; no tree is expected to
    produce one.
    """
    hits = []
    checked = 0
    for n in range(1, n_max + 1):
        _guard_order(n, allow_large)
        codes = tree_codes_cached(n)
        for idx, gg, ggp in _solve_codes(codes, workers):
            checked += 1
            if ggp == gg - 1:
                hits.append(TreeFinding(n, codes[idx], gg, ggp))
    return ConjectureReport(n_max, checked, tuple(hits))


def tree_lower_bound(n: int, max_degree: int) -> int:
    """ceil(2n/(max_degree+3)) - 1, a floor for gamma_g on trees."""
    return -(-2 * n // (max_degree + 3)) - 1


@dataclass(frozen=True)
class LowerBoundReport:
    n: int
    trees_checked: int
    violations: tuple[TreeFinding, ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def lower_bound_check(
    n: int, workers: int = 1, *, allow_large: bool = False
) -> LowerBoundReport:
    """Check the degree-based floor on gamma_g for every tree of order n."""
    _guard_order(n, allow_large)
    codes = tree_codes_cached(n)
    violations = []
    for idx, gg, ggp in _solve_codes(codes, workers):
        g = parse_graph6(codes[idx])
        bound = tree_lower_bound(n, max(g.degree(v) for v in range(g.n)))
        if gg < bound:
            violations.append(TreeFinding(n, codes[idx], gg, ggp))
    return LowerBoundReport(n, len(codes), tuple(violations))


# ---------------------------------------------------------------------------
# persistence


def manifest_path(out_path: str | Path) -> Path:
    return Path(str(out_path) + MANIFEST_SUFFIX)


def read_manifest(out_path: str | Path) -> set[int]:
    path = manifest_path(out_path)
    if not path.exists():
        return set()
    done = set()
    for line in path.read_text().splitlines():
        line = line.strip()
        if line:
            done.add(int(line))
    return done


def write_manifest(out_path: str | Path, completed: set[int]) -> None:
    manifest_path(out_path).write_text(
        "".join(f"{n}\n" for n in sorted(completed))
    )


def append_records(out_path: str | Path, records: list[CensusRecord]) -> None:
    with open(out_path, "a", encoding="ascii") as fh:
        for rec in records:
            fh.write(rec.json_line() + "\n")
