"""Request and response models for the solver service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class SystemRequest(BaseModel):
    """A system file plus run options shared by every pipeline endpoint."""

    system: str = Field(description="system file text (ring header + one polynomial per line)")
    graph: Optional[str] = Field(default=None, description="optional graph file text covering the system")
    order: Literal["given", "heuristic"] = "given"
    add_field_equations: bool = False


class EliminateRequest(SystemRequest):
    level: Optional[int] = Field(default=None, ge=0)


class SolveRequest(SystemRequest):
    count_only: bool = False


class GraphInfoRequest(BaseModel):
    system: Optional[str] = None
    graph: Optional[str] = None
    order: Literal["given", "heuristic"] = "given"


class GenColoringsRequest(BaseModel):
    graph: str
    colors: int = Field(ge=2)
    field: str = "Q"


class GenSubsetSumRequest(BaseModel):
    values: list[int]
    target: int
    field: str = "Q"


class GenDiffeqRequest(BaseModel):
    points: int = Field(ge=2)


class LevelReport(BaseModel):
    level: int
    variable: str
    J: list[str]
    K: list[str]
    I: list[str]
    W: list[str]
    certificate: str


class CliqueReport(BaseModel):
    vars: list[str]
    H: Optional[list[str]] = None


class RunReport(BaseModel):
    levels: Optional[list[LevelReport]] = None
    cliques: Optional[list[CliqueReport]] = None
    final: Optional[list[str]] = None
    count: Optional[int] = None
    solutions: Optional[list[dict[str, str]]] = None
    fill_edges: Optional[list[list[str]]] = None
    clique_number: Optional[int] = None
    certified: Optional[bool] = None


class RunResponse(BaseModel):
    report: RunReport
    exit_code: int
    timings: dict[str, float]


class GraphInfoResponse(BaseModel):
    report: RunReport
    n: int
    edges: list[list[str]]
    order: list[str]
    tree: dict[str, Optional[str]]
    order_is_peo_of_input: bool


class GenerateResponse(BaseModel):
    system: str
    warning: Optional[str] = None
