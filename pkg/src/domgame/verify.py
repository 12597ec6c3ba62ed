"""Property suites that check the game's structural laws on graph corpora.

Each suite is one clause with a pass/fail verdict, a check count, and a
capped list of failure descriptions. The graph suites run over two
corpora: every connected graph with at most seven vertices (fed through
its graph6 code, so the codec is on the path) and a seeded random batch
of 200 graphs with at most nine vertices. The tree suites (lowerbound,
pairs) sweep exhaustive tree enumerations instead.

Suites
    thm1        gamma <= gamma_g <= 2*gamma - 1
    thm2        |gamma_g - gamma_g'| <= 1
    cp          continuation: dominating more never raises the value
    lemma3      in a partially dominated forest the Staller always has a
                legal move dominating at most two new vertices
    lowerbound  gamma_g(T) >= ceil(2n/(maxdeg+3)) - 1 over all trees
    pairs       no tree attains (k, k-1); census scan
    prop5       spanning subgraph H: gamma_g(H) >= ceil((gamma_g(G)+1)/2)
    residual    game value is invariant under taking the residual graph
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import islice

from .census import MAX_TREE_ORDER, conjecture_check, lower_bound_check
from .errors import ContractError
from .graphs import (
    DominationState,
    Graph,
    Mover,
    domination_number,
    is_connected,
    is_forest,
    parse_graph6,
    residual,
)
from .smallgraphs import MAX_EXHAUSTIVE_ORDER, connected_stream, random_graphs, subseed
from .solver import GameSolver, staller_cheap_move
from .spanning import SPANNING_CAP, enumerate_spanning_trees

SUITE_NAMES = ("thm1", "thm2", "cp", "lemma3", "lowerbound", "pairs", "prop5", "residual")

RANDOM_CORPUS_SIZE = 200
RANDOM_CORPUS_ORDER = 9
FAILURE_CAP = 8

# per-graph sampling widths for the suites that draw random states; the
# continuation suite takes the full --samples budget per graph, the
# others solve fresh subgraphs per draw and are kept narrower
SPANNING_TREE_PREFIX = 16
SUBGRAPH_DRAWS = 8
RESIDUAL_DRAW_CAP = 32
LEMMA3_DRAW_CAP = 64


@dataclass(frozen=True)
class ClauseResult:
    suite: str
    passed: bool
    checked: int
    failures: tuple[str, ...] = ()
    note: str = ""

    def line(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        text = f"{head} {self.suite}: {self.checked} checks"
        if self.note:
            text += f" ({self.note})"
        for item in self.failures:
            text += f"\n  {item}"
        return text


@dataclass(frozen=True)
class VerifyReport:
    n_max: int
    seed: int
    samples: int
    clauses: tuple[ClauseResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.clauses)


class _Corpus:
    """The shared graph corpus with one memoizing solver per graph."""

    def __init__(self, n_max: int, seed: int):
        self.items: list[tuple[str, Graph]] = []
        for code in connected_stream(min(n_max, MAX_EXHAUSTIVE_ORDER)):
            self.items.append((f"g6:{code}", parse_graph6(code)))
        for i, g in enumerate(random_graphs(RANDOM_CORPUS_SIZE, RANDOM_CORPUS_ORDER, seed)):
            self.items.append((f"random[{i}](n={g.n},m={len(g.edges())})", g))
        self._solvers: dict[Graph, GameSolver] = {}

    def solver(self, graph: Graph) -> GameSolver:
        s = self._solvers.get(graph)
        if s is None:
            s = GameSolver(graph)
            self._solvers[graph] = s
        return s


def _capped(failures: list[str]) -> tuple[str, ...]:
    return tuple(failures[:FAILURE_CAP])


def _clause_thm1(corpus: _Corpus) -> ClauseResult:
    failures = []
    for label, g in corpus.items:
        gam = domination_number(g)
        gg = corpus.solver(g).value()
        if not gam <= gg <= 2 * gam - 1:
            failures.append(f"{label}: gamma={gam} gamma_g={gg}")
    return ClauseResult("thm1", not failures, len(corpus.items), _capped(failures))


def _clause_thm2(corpus: _Corpus) -> ClauseResult:
    failures = []
    for label, g in corpus.items:
        s = corpus.solver(g)
        gg = s.value()
        ggp = s.value(mover=Mover.STALLER)
        if abs(gg - ggp) > 1:
            failures.append(f"{label}: gamma_g={gg} gamma_g'={ggp}")
    return ClauseResult("thm2", not failures, len(corpus.items), _capped(failures))


def _clause_cp(corpus: _Corpus, seed: int, samples: int) -> ClauseResult:
    failures = []
    checked = 0
    for idx, (label, g) in enumerate(corpus.items):
        s = corpus.solver(g)
        rng = random.Random(subseed(seed, idx))
        for _ in range(samples):
            small = rng.getrandbits(g.n) & g.full
            big = small | (rng.getrandbits(g.n) & g.full)
            checked += 1
            for mover in Mover:
                va = s.value(big, mover)
                vb = s.value(small, mover)
                if va > vb:
                    failures.append(
                        f"{label}: mover={mover.name} dominated {big:#x}>={small:#x} "
                        f"but value {va} > {vb}"
                    )
    return ClauseResult("cp", not failures, checked, _capped(failures))


def _clause_lemma3(corpus: _Corpus, seed: int, samples: int) -> ClauseResult:
    failures = []
    checked = 0
    forests = 0
    draws = min(samples, LEMMA3_DRAW_CAP)
    for idx, (label, g) in enumerate(corpus.items):
        if not is_forest(g):
            continue
        forests += 1
        rng = random.Random(subseed(seed, 10_000 + idx))
        seen = set()
        for _ in range(draws):
            dom = rng.getrandbits(g.n) & g.full
            if dom == g.full or dom in seen:
                continue
            seen.add(dom)
            checked += 1
            state = DominationState(g, dom, Mover.STALLER)
            v = staller_cheap_move(state)
            gained = g.closed[v] & ~dom
            if gained == 0:
                failures.append(f"{label}: dom={dom:#x} move {v} is illegal")
            elif gained.bit_count() > 2:
                failures.append(
                    f"{label}: dom={dom:#x} move {v} dominates {gained.bit_count()} new"
                )
    note = f"{forests} forests in corpus"
    return ClauseResult("lemma3", not failures, checked, _capped(failures), note)


def _clause_lowerbound(n_max: int, jobs: int) -> ClauseResult:
    failures = []
    checked = 0
    top = min(n_max, MAX_TREE_ORDER)
    for n in range(1, top + 1):
        report = lower_bound_check(n, workers=jobs)
        checked += report.trees_checked
        for hit in report.violations:
            failures.append(
                f"n={hit.n} {hit.code}: gamma_g={hit.gamma_g} below floor"
            )
    return ClauseResult(
        "lowerbound", not failures, checked, _capped(failures), f"orders 1..{top}"
    )


def _clause_pairs(n_max: int, jobs: int) -> ClauseResult:
    top = min(n_max, MAX_TREE_ORDER)
    report = conjecture_check(top, workers=jobs)
    failures = [
        f"n={hit.n} {hit.code}: ({hit.gamma_g},{hit.gamma_g_prime})"
        for hit in report.counterexamples
    ]
    note = f"orders 1..{top}; a hit here is a research finding"
    return ClauseResult(
        "pairs", not failures, report.trees_checked, _capped(failures), note
    )


def _clause_prop5(corpus: _Corpus, seed: int) -> ClauseResult:
    failures = []
    checked = 0
    for idx, (label, g) in enumerate(corpus.items):
        bound = -(-(corpus.solver(g).value() + 1) // 2)
        subgraphs: list[tuple[str, Graph]] = []
        if is_connected(g):
            trees = islice(enumerate_spanning_trees(g, cap=SPANNING_CAP), SPANNING_TREE_PREFIX)
            for t_idx, tree_edges in enumerate(trees):
                subgraphs.append((f"tree[{t_idx}]", Graph(g.n, list(tree_edges))))
        rng = random.Random(subseed(seed, 20_000 + idx))
        edges = g.edges()
        for s_idx in range(SUBGRAPH_DRAWS):
            p = rng.uniform(0.2, 0.9)
            kept = [e for e in edges if rng.random() < p]
            subgraphs.append((f"sub[{s_idx}]", Graph(g.n, kept)))
        for sub_label, h in subgraphs:
            checked += 1
            vh = corpus.solver(h).value()
            if vh < bound:
                failures.append(
                    f"{label} {sub_label}: gamma_g {vh} < ceil bound {bound}"
                )
    return ClauseResult("prop5", not failures, checked, _capped(failures))


def _clause_residual(corpus: _Corpus, seed: int, samples: int) -> ClauseResult:
    failures = []
    checked = 0
    draws = min(samples, RESIDUAL_DRAW_CAP)
    for idx, (label, g) in enumerate(corpus.items):
        s = corpus.solver(g)
        rng = random.Random(subseed(seed, 30_000 + idx))
        masks = {0}
        for _ in range(draws):
            masks.add(rng.getrandbits(g.n) & g.full)
        for dom in sorted(masks):
            res = residual(DominationState(g, dom))
            rs = corpus.solver(res.graph)
            checked += 1
            for mover in Mover:
                v_full = s.value(dom, mover)
                v_res = rs.value(res.dominated, mover)
                if v_full != v_res:
                    failures.append(
                        f"{label}: dom={dom:#x} mover={mover.name} "
                        f"value {v_full} != residual value {v_res}"
                    )
    return ClauseResult("residual", not failures, checked, _capped(failures))


def run_suites(
    suites: list[str] | None = None,
    *,
    n_max: int = 7,
    seed: int = 1,
    samples: int = 200,
    jobs: int = 1,
) -> VerifyReport:
    """Run the named suites and collect one ClauseResult per suite.

    ``suites`` of None or ["all"] runs everything. n_max caps both the
    exhaustive connected-graph stream (at 7) and the tree sweeps.
    """
    if n_max < 1:
        raise ContractError("n_max must be >= 1")
    if samples < 1:
        raise ContractError("samples must be >= 1")
    if jobs < 1:
        raise ContractError("jobs must be >= 1")
    if not suites or suites == ["all"]:
        chosen = list(SUITE_NAMES)
    else:
        unknown = [s for s in suites if s not in SUITE_NAMES]
        if unknown:
            raise ContractError(
                f"unknown suites {unknown}; expected subset of {list(SUITE_NAMES)}"
            )
        chosen = list(dict.fromkeys(suites))

    graph_suites = {"thm1", "thm2", "cp", "lemma3", "prop5", "residual"}
    corpus = _Corpus(n_max, seed) if graph_suites & set(chosen) else None

    clauses = []
    for name in chosen:
        if name == "thm1":
            clauses.append(_clause_thm1(corpus))
        elif name == "thm2":
            clauses.append(_clause_thm2(corpus))
        elif name == "cp":
            clauses.append(_clause_cp(corpus, seed, samples))
        elif name == "lemma3":
            clauses.append(_clause_lemma3(corpus, seed, samples))
        elif name == "lowerbound":
            clauses.append(_clause_lowerbound(n_max, jobs))
        elif name == "pairs":
            clauses.append(_clause_pairs(n_max, jobs))
        elif name == "prop5":
            clauses.append(_clause_prop5(corpus, seed))
        elif name == "residual":
            clauses.append(_clause_residual(corpus, seed, samples))
    return VerifyReport(n_max, seed, samples, tuple(clauses))
