"""Service operations: one function per endpoint, shared with the CLI."""

from __future__ import annotations

from ..arith import parse_field
from ..chordal import parse_graph
from ..pipeline import (run_chord_elim, run_clique_elim, run_graph_info,
                        run_solve)
from ..systems import format_system, gen_colorings, gen_diffeq, gen_subset_sum
from . import models


def eliminate(req: models.EliminateRequest) -> models.RunResponse:
    outcome = run_chord_elim(req.system, graph_text=req.graph,
                             level=req.level, order_mode=req.order,
                             add_field_eqs=req.add_field_equations)
    return models.RunResponse(report=models.RunReport(**outcome.report),
                              exit_code=outcome.exit_code,
                              timings=outcome.timings)


def clique_eliminate(req: models.SystemRequest) -> models.RunResponse:
    outcome = run_clique_elim(req.system, graph_text=req.graph,
                              order_mode=req.order,
                              add_field_eqs=req.add_field_equations)
    return models.RunResponse(report=models.RunReport(**outcome.report),
                              exit_code=outcome.exit_code,
                              timings=outcome.timings)


def solve(req: models.SolveRequest) -> models.RunResponse:
    outcome = run_solve(req.system, graph_text=req.graph,
                        order_mode=req.order,
                        add_field_eqs=req.add_field_equations,
                        count_only=req.count_only)
    return models.RunResponse(report=models.RunReport(**outcome.report),
                              exit_code=outcome.exit_code,
                              timings=outcome.timings)


def graph_info(req: models.GraphInfoRequest) -> models.GraphInfoResponse:
    outcome, extra = run_graph_info(system_text=req.system,
                                    graph_text=req.graph,
                                    order_mode=req.order)
    return models.GraphInfoResponse(report=models.RunReport(**outcome.report),
                                    **extra)


def generate_colorings(req: models.GenColoringsRequest) -> models.GenerateResponse:
    graph = parse_graph(req.graph)
    field = parse_field(req.field)
    ring, gens, faithful = gen_colorings(graph, req.colors, field)
    warning = None
    if not faithful:
        warning = (f"GF({field.modulus}) has no primitive {req.colors}-th "
                   f"root of unity; the coloring encoding is not faithful")
    return models.GenerateResponse(system=format_system(ring, gens),
                                   warning=warning)


def generate_subset_sum(req: models.GenSubsetSumRequest) -> models.GenerateResponse:
    field = parse_field(req.field)
    ring, gens = gen_subset_sum(req.values, req.target, field)
    return models.GenerateResponse(system=format_system(ring, gens))


def generate_diffeq(req: models.GenDiffeqRequest) -> models.GenerateResponse:
    ring, gens = gen_diffeq(req.points)
    return models.GenerateResponse(system=format_system(ring, gens))
