"""Exact minimax solver for the domination game.

The game: two players alternately choose vertices, and every chosen vertex
must dominate at least one vertex not dominated before (a vertex is
dominated once some chosen vertex is in its closed neighborhood). The game
ends when all vertices are dominated. Dominator wants the game over in as
few moves as possible, Staller in as many; the value of a state is the
number of moves still to be played under optimal play by both. The game
domination number gamma_g is the value with Dominator moving first on a
fresh graph, gamma_g' the Staller-start variant.

``oracle_value`` is the reference implementation: direct minimax over legal
moves, no memoization, no pruning, no bounds. It is deliberately naive and
kept independent of the optimized path so the two can be compared.

``GameSolver`` is the optimized path: one memo table per graph keyed on
(dominated set, mover), move pruning justified by the continuation
principle (extra domination never hurts Dominator and never helps Staller),
and safe interval bounds. With k undominated vertices and maximum closed
neighborhood size c, the value always lies in [ceil(k/c), k]; children whose
interval cannot beat the current best are skipped, which never changes the
returned value. All tie-breaks favor the lowest vertex index, so repeated
runs are byte-identical, statistics included.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .errors import ContractError, GuardError
from .graphs import DominationState, Graph, Mover, domination_number, is_forest, residual

MEMO_CAP_ENV = "DOMGAME_MEMO_CAP"


def oracle_value(state: DominationState) -> int:
    """Game value by plain minimax. Exponential; for cross-checks on small inputs."""
    closed = state.graph.closed
    full = state.graph.full

    def rec(dom: int, staller: bool) -> int:
        if dom == full:
            return 0
        outcomes = []
        for c in closed:
            if c & ~dom:
                outcomes.append(rec(dom | c, not staller))
        return 1 + (max(outcomes) if staller else min(outcomes))

    return rec(state.dominated, state.mover is Mover.STALLER)


def legal_moves(state: DominationState) -> list[int]:
    """Vertices whose play would newly dominate something, ascending."""
    undom = state.graph.full & ~state.dominated
    closed = state.graph.closed
    return [v for v in range(state.graph.n) if closed[v] & undom]


def prune_dominated_moves(state: DominationState, moves: list[int]) -> list[int]:
    """Drop moves the mover never needs, by the continuation principle.

    For Dominator a move is dropped when another candidate newly dominates a
    strict superset of what it does; for Staller when another candidate
    newly dominates a strict subset. Moves with equal newly-dominated sets
    collapse to the lowest index. The minimax value over the kept list
    equals the value over the full list.
    """
    undom = state.graph.full & ~state.dominated
    closed = state.graph.closed
    gains = [(closed[v] & undom, v) for v in moves]
    if any(g == 0 for g, _ in gains):
        raise ContractError("move list contains an illegal move")
    if state.mover is Mover.DOMINATOR:
        order = sorted(gains, key=lambda gv: (-gv[0].bit_count(), gv[1]))
        kept: list[tuple[int, int]] = []
        for g, v in order:
            if not any(g & kg == g for kg, _ in kept):
                kept.append((g, v))
    else:
        order = sorted(gains, key=lambda gv: (gv[0].bit_count(), gv[1]))
        kept = []
        for g, v in order:
            if not any(g & kg == kg for kg, _ in kept):
                kept.append((g, v))
    return sorted(v for _, v in kept)


@dataclass(frozen=True)
class SolveStats:
    nodes_expanded: int
    memo_hits: int
    max_table_size: int


@dataclass(frozen=True)
class SolveResult:
    value: int
    optimal_first_moves: tuple[int, ...]
    stats: SolveStats


@dataclass(frozen=True)
class TraceStep:
    player: Mover
    vertex: int
    newly_dominated: int


def _memo_cap_from_env() -> int:
    raw = os.environ.get(MEMO_CAP_ENV, "0")
    try:
        cap = int(raw)
    except ValueError:
        raise ContractError(f"{MEMO_CAP_ENV} must be an integer, got {raw!r}") from None
    return max(cap, 0)


class GameSolver:
    """Memoized minimax engine bound to one graph.

    The memo table is shared across every query against the instance, so
    sweeping many dominated sets of the same graph (continuation-principle
    checks, spanning comparisons) costs little beyond the first solve.
    """

    def __init__(self, graph: Graph, *, pruning: bool = True, memo_cap: int | None = None):
        self.graph = graph
        self.pruning = pruning
        self.memo_cap = _memo_cap_from_env() if memo_cap is None else max(memo_cap, 0)
        self._memo: dict[int, int] = {}
        self._closed = graph.closed
        self._full = graph.full
        # largest possible number of newly dominated vertices in one move
        self._maxgain = max((c.bit_count() for c in graph.closed), default=1)
        self.nodes_expanded = 0
        self.memo_hits = 0

    # -- move generation ---------------------------------------------------

    def _ordered_moves(self, undom: int, bit: int) -> list[tuple[int, int]]:
        """(gain mask, vertex) candidates, strongest-first for the mover."""
        closed = self._closed
        gains = []
        for v in range(self.graph.n):
            g = closed[v] & undom
            if g:
                gains.append((g, v))
        if bit == 0:
            order = sorted(gains, key=lambda gv: (-gv[0].bit_count(), gv[1]))
            if not self.pruning:
                return order
            kept: list[tuple[int, int]] = []
            for g, v in order:
                if not any(g & kg == g for kg, _ in kept):
                    kept.append((g, v))
        else:
            order = sorted(gains, key=lambda gv: (gv[0].bit_count(), gv[1]))
            if not self.pruning:
                return order
            kept = []
            for g, v in order:
                if not any(g & kg == kg for kg, _ in kept):
                    kept.append((g, v))
        return kept

    # -- search ------------------------------------------------------------

    def _search(self, dom: int, bit: int) -> int:
        full = self._full
        if dom == full:
            return 0
        key = dom << 1 | bit
        memo = self._memo
        hit = memo.get(key)
        if hit is not None:
            self.memo_hits += 1
            return hit
        self.nodes_expanded += 1
        closed = self._closed
        undom = full & ~dom
        k = undom.bit_count()
        maxgain = self._maxgain
        floor = -(-k // maxgain)
        if bit == 0:
            # Dominator: minimize. k is always achievable as an upper bound.
            best = k
            stop = floor if floor > 1 else 1
            if best > stop:
                for g, v in self._ordered_moves(undom, 0):
                    ck = k - g.bit_count()
                    if ck == 0:
                        outcome = 1
                    else:
                        if 1 + -(-ck // maxgain) >= best:
                            continue
                        outcome = 1 + self._search(dom | closed[v], 1)
                    if outcome < best:
                        best = outcome
                        if best <= stop:
                            break
        else:
            # Staller: maximize. floor is a proven lower bound.
            best = floor
            stop = k
            if best < stop:
                for g, v in self._ordered_moves(undom, 1):
                    ck = k - g.bit_count()
                    if 1 + ck <= best:
                        continue
                    outcome = 1 + self._search(dom | closed[v], 0)
                    if outcome > best:
                        best = outcome
                        if best >= stop:
                            break
        memo[key] = best
        if self.memo_cap and len(memo) > self.memo_cap:
            raise GuardError(
                f"memo table exceeded {self.memo_cap} entries; "
                f"raise {MEMO_CAP_ENV} or simplify the input"
            )
        return best

    # -- public queries ------------------------------------------------------

    def value(self, dominated: int = 0, mover: Mover = Mover.DOMINATOR) -> int:
        self._check(dominated)
        return self._search(dominated, 0 if mover is Mover.DOMINATOR else 1)

    def solve(
        self,
        dominated: int = 0,
        mover: Mover = Mover.DOMINATOR,
        *,
        exact_front: bool = False,
    ) -> SolveResult:
        """Value plus the set of first moves achieving it.

        By default the front is computed over the pruned move list; with
        ``exact_front`` every legal move is scored, so co-optimal moves that
        pruning would fold away are reported too.
        """
        self._check(dominated)
        nodes0, hits0 = self.nodes_expanded, self.memo_hits
        bit = 0 if mover is Mover.DOMINATOR else 1
        closed = self._closed
        undom = self._full & ~dominated
        front: list[int] = []
        if undom:
            value = self._search(dominated, bit)
            self.nodes_expanded += 1  # the root scan below
            if exact_front:
                cands = [v for v in range(self.graph.n) if closed[v] & undom]
            else:
                cands = sorted(v for _, v in self._ordered_moves(undom, bit))
            for v in cands:
                child = dominated | closed[v]
                outcome = 1 if child == self._full else 1 + self._search(child, bit ^ 1)
                if outcome == value:
                    front.append(v)
        else:
            value = 0
        stats = SolveStats(
            nodes_expanded=self.nodes_expanded - nodes0,
            memo_hits=self.memo_hits - hits0,
            max_table_size=len(self._memo),
        )
        return SolveResult(value=value, optimal_first_moves=tuple(front), stats=stats)

    def _check(self, dominated: int) -> None:
        if dominated & ~self._full:
            raise ContractError("dominated mask names vertices outside the graph")


def game_value(
    state: DominationState,
    *,
    exact_front: bool = False,
    pruning: bool = True,
    memo_cap: int | None = None,
) -> SolveResult:
    """Solve one state with a fresh engine. See ``GameSolver.solve``."""
    solver = GameSolver(state.graph, pruning=pruning, memo_cap=memo_cap)
    return solver.solve(state.dominated, state.mover, exact_front=exact_front)


def gamma_pair(graph: Graph, *, memo_cap: int | None = None) -> tuple[int, int]:
    """(gamma_g, gamma_g') of a fresh graph, sharing one memo table."""
    solver = GameSolver(graph, memo_cap=memo_cap)
    return (solver.value(0, Mover.DOMINATOR), solver.value(0, Mover.STALLER))


def extract_trace(state: DominationState, *, memo_cap: int | None = None) -> list[TraceStep]:
    """One optimal line of play, lowest-index move at every tie.

    The newly-dominated counts along the trace sum to the number of vertices
    undominated at the start, and the trace length equals the game value.
    """
    solver = GameSolver(state.graph, memo_cap=memo_cap)
    closed = state.graph.closed
    full = state.graph.full
    dom = state.dominated
    bit = 0 if state.mover is Mover.DOMINATOR else 1
    steps: list[TraceStep] = []
    while dom != full:
        target = solver._search(dom, bit)
        undom = full & ~dom
        for v in sorted(v for _, v in solver._ordered_moves(undom, bit)):
            child = dom | closed[v]
            outcome = 1 if child == full else 1 + solver._search(child, bit ^ 1)
            if outcome == target:
                steps.append(
                    TraceStep(
                        player=Mover.DOMINATOR if bit == 0 else Mover.STALLER,
                        vertex=v,
                        newly_dominated=(closed[v] & undom).bit_count(),
                    )
                )
                dom = child
                bit ^= 1
                break
        else:  # pragma: no cover - would mean the solver is inconsistent
            raise AssertionError("no move achieves the computed value")
    return steps


def staller_cheap_move(state: DominationState) -> int:
    """A legal Staller move newly dominating at most two vertices.

    Requires a forest with at least one undominated vertex. Works on the
    residual graph: every residual component has a vertex of degree <= 1,
    and playing such a vertex newly dominates at most two vertices (exactly
    one when the leaf is already dominated). Returns the lowest-index such
    vertex of the original graph.
    """
    g = state.graph
    if not is_forest(g):
        raise ContractError("staller_cheap_move requires a forest")
    if g.full & ~state.dominated == 0:
        raise ContractError("state is fully dominated; no legal moves")
    red = residual(state)
    best = None
    for i in range(red.graph.n):
        if red.graph.degree(i) <= 1:
            v = red.origin_map[i]
            if best is None or v < best:
                best = v
    assert best is not None  # a nonempty forest always has a leaf
    return best


@dataclass(frozen=True)
class InvariantReport:
    order: int
    gamma: int
    gamma_g: int
    gamma_g_prime: int
    thm_bounds_ok: bool
    variant_gap_ok: bool
    continuation_ok: bool
    cp_pairs_checked: int
    failures: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return self.thm_bounds_ok and self.variant_gap_ok and self.continuation_ok


def verify_invariants(graph: Graph, samples: int = 200, seed: int = 0) -> InvariantReport:
    """Check the classical bounds on one graph.

    gamma <= gamma_g <= 2*gamma - 1, |gamma_g - gamma_g'| <= 1, and the
    continuation principle on ``samples`` seeded random nested pairs of
    dominated sets. Failures are solver bugs, not properties of the graph.
    """
    gamma = domination_number(graph)
    solver = GameSolver(graph)
    gg = solver.value(0, Mover.DOMINATOR)
    ggp = solver.value(0, Mover.STALLER)
    failures: list[str] = []
    thm_bounds_ok = gamma <= gg <= 2 * gamma - 1 if graph.n else gg == 0
    if not thm_bounds_ok:
        failures.append(f"bounds: gamma={gamma} gamma_g={gg}")
    variant_gap_ok = abs(gg - ggp) <= 1
    if not variant_gap_ok:
        failures.append(f"variant gap: gamma_g={gg} gamma_g'={ggp}")
    rng = random.Random(seed)
    continuation_ok = True
    full = graph.full
    for _ in range(samples):
        a = rng.getrandbits(graph.n) & full if graph.n else 0
        b = a & (rng.getrandbits(graph.n) if graph.n else 0)
        for mover in Mover:
            va = solver.value(a, mover)
            vb = solver.value(b, mover)
            if va > vb:
                continuation_ok = False
                failures.append(f"continuation: A={a:#x} B={b:#x} mover={mover.value} {va}>{vb}")
    return InvariantReport(
        order=graph.n,
        gamma=gamma,
        gamma_g=gg,
        gamma_g_prime=ggp,
        thm_bounds_ok=thm_bounds_ok,
        variant_gap_ok=variant_gap_ok,
        continuation_ok=continuation_ok,
        cp_pairs_checked=samples,
        failures=tuple(failures),
    )
