"""HTTP facade over the core package.

One endpoint per workflow: solving a position, emitting a named family,
running the tree census, analyzing spanning subgraphs, and running the
verification suites. Domain errors surface as HTTP 400 with a kind tag
(format, contract, guard) so thin clients can map them to exit codes
without parsing messages.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from . import schemas as S
from .census import census_orders
from .errors import ContractError, DomGameError, GuardError
from .families import (
    PAIR_FAMILIES,
    TREE_FAMILIES,
    make_partial_fixture,
    make_spanning_pair,
    make_tree_family,
)
from .graphs import (
    DominationState,
    Mover,
    bit_list,
    emit_edge_list,
    emit_graph6,
    load_graph_text,
    mask_of,
)
from .solver import GameSolver, extract_trace
from .spanning import Prop9Report, SpanningReport, spanning_extremes, verify_prop9
from .verify import run_suites

app = FastAPI(title="domgame", version=__version__)


@app.exception_handler(DomGameError)
async def _domain_error(request: Request, exc: DomGameError) -> JSONResponse:
    body = S.ErrorResponse(error=S.ErrorBody(kind=exc.kind, message=str(exc)))
    return JSONResponse(status_code=400, content=body.model_dump(by_alias=True))


@app.get("/health", response_model=S.HealthResponse)
def health() -> S.HealthResponse:
    return S.HealthResponse(version=__version__)


def _dominated_mask(vertices: list[int], n: int) -> int:
    for v in vertices:
        if not 0 <= v < n:
            raise ContractError(f"dominated vertex {v} outside 0..{n - 1}")
    return mask_of(vertices)


@app.post("/solve", response_model=S.SolveResponse, response_model_exclude_none=True)
def solve(req: S.SolveRequest) -> S.SolveResponse:
    g = load_graph_text(req.graph)
    mover = Mover.DOMINATOR if req.variant == "dominator" else Mover.STALLER
    dominated = _dominated_mask(req.dominated, g.n)
    result = GameSolver(g).solve(dominated, mover, exact_front=req.exact_front)
    trace = None
    if req.line:
        steps = extract_trace(DominationState(g, dominated, mover))
        trace = [
            S.TraceStepModel(
                player="D" if step.player is Mover.DOMINATOR else "S",
                vertex=step.vertex,
                newly_dominated=step.newly_dominated,
            )
            for step in steps
        ]
    return S.SolveResponse(
        order=g.n,
        variant=req.variant,
        dominated=bit_list(dominated),
        value=result.value,
        optimal_first_moves=list(result.optimal_first_moves),
        stats=S.StatsModel(
            nodes_expanded=result.stats.nodes_expanded,
            memo_hits=result.stats.memo_hits,
            max_table_size=result.stats.max_table_size,
        ),
        trace=trace,
    )


@app.post("/family", response_model=S.FamilyResponse, response_model_exclude_none=True)
def family(req: S.FamilyRequest) -> S.FamilyResponse:
    which = None
    dominated: list[int] = []
    if req.name in TREE_FAMILIES:
        kind = "tree"
        lg = make_tree_family(req.name, **req.params)
        graph, labels = lg.graph, lg.labels
    elif req.name in PAIR_FAMILIES:
        kind = "pair"
        pair = make_spanning_pair(req.name, **req.params)
        lg = pair[0] if req.which == "G" else pair[1]
        which = req.which
        graph, labels = lg.graph, lg.labels
    else:
        kind = "fixture"
        if req.params:
            raise ContractError(f"fixture {req.name!r} takes no parameters")
        fixture = make_partial_fixture(req.name)
        graph, labels = fixture.state.graph, fixture.labels
        dominated = bit_list(fixture.state.dominated)
    text = emit_graph6(graph) if req.emit == "g6" else emit_edge_list(graph)
    return S.FamilyResponse(
        name=req.name,
        kind=kind,
        which=which,
        order=graph.n,
        size=len(graph.edges()),
        graph=text,
        labels=labels,
        dominated=dominated,
    )


@app.post("/census", response_model=S.CensusResponse)
def census(req: S.CensusRequest) -> S.CensusResponse:
    results = census_orders(
        req.orders,
        req.workers,
        allow_large=req.allow_large,
        witness_cap=req.witness_cap,
    )
    orders = []
    for n, total, records in results:
        orders.append(
            S.CensusOrderModel(
                n=n,
                trees=total,
                records=[
                    S.CensusRecordModel(
                        n=r.n,
                        gg=r.gamma_g,
                        ggp=r.gamma_g_prime,
                        count=r.count,
                        witnesses=list(r.witnesses),
                    )
                    for r in records
                ],
                lines=[r.json_line() for r in records],
            )
        )
    return S.CensusResponse(orders=orders)


def _report_model(report: SpanningReport) -> S.SpanningReportModel:
    return S.SpanningReportModel(
        order=report.order,
        base_gamma=report.base_gamma,
        base_gamma_g=report.base_gamma_g,
        base_gamma_g_prime=report.base_gamma_g_prime,
        tree_count=report.tree_count,
        min_tree=S.TreeExtremeModel(
            value=report.min_tree.value, edges=list(report.min_tree.edges)
        ),
        max_tree=S.TreeExtremeModel(
            value=report.max_tree.value, edges=list(report.max_tree.edges)
        ),
        prop5_ok=report.prop5_ok,
        gamma_preserving_tree_exists=report.gamma_preserving_tree_exists,
    )


def _prop9_model(report: Prop9Report) -> S.Prop9Model:
    return S.Prop9Model(
        gamma_G=report.gamma_G,
        gamma_H=report.gamma_H,
        gamma_g_G=report.gamma_g_G,
        gamma_g_H=report.gamma_g_H,
        lower_applicable=report.lower_applicable,
        lower_ok=report.lower_ok,
        upper_applicable=report.upper_applicable,
        upper_ok=report.upper_ok,
        gamma_preserving_tree_exists=report.gamma_preserving_tree_exists,
        all_ok=report.all_ok,
    )


@app.post("/spanning", response_model=S.SpanningResponse, response_model_exclude_none=True)
def spanning(req: S.SpanningRequest) -> S.SpanningResponse:
    if req.graph is not None:
        g = load_graph_text(req.graph)
        return S.SpanningResponse(
            source="graph", report=_report_model(spanning_extremes(g, cap=req.cap))
        )
    pair = make_spanning_pair(req.pair_family, **req.params)
    prop9 = verify_prop9(pair[0].graph, pair[1].graph)
    note = None
    try:
        report = _report_model(spanning_extremes(pair[0].graph, cap=req.cap))
    except GuardError as exc:
        # pair comparisons stay useful on hosts too dense to enumerate
        report = None
        note = str(exc)
    return S.SpanningResponse(
        source=req.pair_family, report=report, note=note, pair=_prop9_model(prop9)
    )


@app.post("/verify", response_model=S.VerifyResponse)
def verify(req: S.VerifyRequest) -> S.VerifyResponse:
    report = run_suites(
        req.suites, n_max=req.n_max, seed=req.seed, samples=req.samples, jobs=req.jobs
    )
    return S.VerifyResponse(
        n_max=report.n_max,
        seed=report.seed,
        samples=report.samples,
        all_passed=report.all_passed,
        clauses=[
            S.ClauseModel(
                suite=c.suite,
                passed=c.passed,
                checked=c.checked,
                failures=list(c.failures),
                note=c.note,
            )
            for c in report.clauses
        ],
    )
