"""Request and response bodies for the HTTP service.

Every response carries a top-level ``schema`` field (currently 1) so
clients can detect payload revisions. Field names mirror the JSON the
command-line client prints.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCHEMA_VERSION = 1


class _Response(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")


class ErrorBody(BaseModel):
    kind: str
    message: str


class ErrorResponse(_Response):
    error: ErrorBody


class HealthResponse(_Response):
    status: str = "ok"
    version: str


# --------------------------------------------------------------------------
# solve


class SolveRequest(BaseModel):
    graph: str
    variant: Literal["dominator", "staller"] = "dominator"
    dominated: list[int] = Field(default_factory=list)
    exact_front: bool = False
    line: bool = False


class StatsModel(BaseModel):
    nodes_expanded: int
    memo_hits: int
    max_table_size: int


class TraceStepModel(BaseModel):
    player: Literal["D", "S"]
    vertex: int
    newly_dominated: int


class SolveResponse(_Response):
    order: int
    variant: str
    dominated: list[int]
    value: int
    optimal_first_moves: list[int]
    stats: StatsModel
    trace: Optional[list[TraceStepModel]] = None


# --------------------------------------------------------------------------
# family


class FamilyRequest(BaseModel):
    name: str
    params: dict[str, int] = Field(default_factory=dict)
    emit: Literal["g6", "edges"] = "edges"
    which: Literal["G", "H"] = "G"


class FamilyResponse(_Response):
    name: str
    kind: Literal["tree", "pair", "fixture"]
    which: Optional[str] = None
    order: int
    size: int
    graph: str
    labels: dict[str, int]
    dominated: list[int] = Field(default_factory=list)


# --------------------------------------------------------------------------
# census


class CensusRequest(BaseModel):
    orders: list[int] = Field(min_length=1)
    workers: int = Field(default=1, ge=1)
    allow_large: bool = False
    witness_cap: int = Field(default=4, ge=0)


class CensusRecordModel(BaseModel):
    n: int
    gg: int
    ggp: int
    count: int
    witnesses: list[str]


class CensusOrderModel(BaseModel):
    n: int
    trees: int
    records: list[CensusRecordModel]
    lines: list[str]


class CensusResponse(_Response):
    orders: list[CensusOrderModel]


# --------------------------------------------------------------------------
# spanning


class SpanningRequest(BaseModel):
    graph: Optional[str] = None
    pair_family: Optional[str] = None
    params: dict[str, int] = Field(default_factory=dict)
    cap: int = Field(default=100_000, ge=1)

    @model_validator(mode="after")
    def _one_source(self):
        if (self.graph is None) == (self.pair_family is None):
            raise ValueError("provide exactly one of graph or pair_family")
        return self


class TreeExtremeModel(BaseModel):
    value: int
    edges: list[tuple[int, int]]


class SpanningReportModel(BaseModel):
    order: int
    base_gamma: int
    base_gamma_g: int
    base_gamma_g_prime: int
    tree_count: int
    min_tree: TreeExtremeModel
    max_tree: TreeExtremeModel
    prop5_ok: bool
    gamma_preserving_tree_exists: Optional[bool] = None


class Prop9Model(BaseModel):
    gamma_G: int
    gamma_H: int
    gamma_g_G: int
    gamma_g_H: int
    lower_applicable: bool
    lower_ok: Optional[bool] = None
    upper_applicable: bool
    upper_ok: Optional[bool] = None
    gamma_preserving_tree_exists: Optional[bool] = None
    all_ok: bool


class SpanningResponse(_Response):
    source: str
    report: Optional[SpanningReportModel] = None
    note: Optional[str] = None
    pair: Optional[Prop9Model] = None


# --------------------------------------------------------------------------
# verify


class VerifyRequest(BaseModel):
    suites: list[str] = Field(default_factory=lambda: ["all"])
    n_max: int = Field(default=7, ge=1)
    seed: int = 1
    samples: int = Field(default=200, ge=1)
    jobs: int = Field(default=1, ge=1)


class ClauseModel(BaseModel):
    suite: str
    passed: bool
    checked: int
    failures: list[str]
    note: str = ""


class VerifyResponse(_Response):
    n_max: int
    seed: int
    samples: int
    all_passed: bool
    clauses: list[ClauseModel]
