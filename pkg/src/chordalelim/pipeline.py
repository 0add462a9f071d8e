"""Orchestration: wire parsing, graph handling, elimination and merging into
deterministic machine-readable reports.

The report dict follows a fixed schema: ``levels[]`` (each with ``J``, ``K``,
``I``, ``W``, ``certificate``), ``cliques[]`` (each with ``vars``, ``H``),
``count``, ``solutions[]``, ``fill_edges``, ``clique_number`` and
``certified``.  Identical inputs produce byte-identical JSON; wall-clock
timings are reported separately and never enter the JSON document.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .arith import PrimeField
from .chordal import (ChordalContext, complete_with_order,
                      graph_of_system, heuristic_order, parse_graph)
from .cliques import cliques_elim, merge_solutions
from .elim import chordal_eliminate
from .poly import format_polynomial
from .systems import field_equations, parse_system

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNCERTIFIED = 2


@dataclass
class RunOutcome:
    report: dict
    exit_code: int
    timings: dict = field(default_factory=dict)


def _fmt_all(polys):
    return [format_polynomial(f) for f in polys]


def _empty_report():
    return {
        "levels": None,
        "cliques": None,
        "final": None,
        "count": None,
        "solutions": None,
        "fill_edges": None,
        "clique_number": None,
        "certified": None,
    }


def report_json_bytes(report: dict) -> bytes:
    return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode()


@dataclass
class Prepared:
    ring: object
    gens: list
    ctx: ChordalContext


def prepare(system_text: str, graph_text=None, order_mode="given",
            add_field_eqs=False) -> Prepared:
    """Parse the system, optionally widen its graph, pick the elimination
    order and build the chordal context."""
    ring, gens = parse_system(system_text)
    if not gens:
        raise ValueError("system declares no polynomials")
    if add_field_eqs:
        if not isinstance(ring.field, PrimeField):
            raise ValueError("field equations need a GF(p) system")
        seen = set(gens)
        for f in field_equations(ring):
            if f not in seen:
                gens.append(f)
    base = graph_of_system(gens, n=ring.nvars)
    if graph_text is not None:
        declared = parse_graph(graph_text)
        if declared.n != ring.nvars:
            raise ValueError("graph vertex count differs from the ring")
        if not base.subgraph_of(declared):
            raise ValueError("declared graph misses edges of the system")
        base = declared
    if order_mode == "given":
        order = tuple(range(ring.nvars))
    elif order_mode == "heuristic":
        order = heuristic_order(base)
    else:
        raise ValueError(f"unknown order mode {order_mode!r}")
    ctx = complete_with_order(base, order)
    return Prepared(ring=ring, gens=gens, ctx=ctx)


def _graph_section(prep: Prepared, report: dict):
    names = prep.ring.names
    report["fill_edges"] = [[names[u], names[v]]
                            for u, v in prep.ctx.fill_edges]
    report["clique_number"] = prep.ctx.clique_number


def _level_records(trace, names):
    out = []
    for step in trace.steps:
        out.append({
            "level": step.level,
            "variable": names[step.variable],
            "J": _fmt_all(step.J_appended),
            "K": _fmt_all(step.K_next),
            "I": _fmt_all(step.I_next),
            "W": _fmt_all(step.W_next),
            "certificate": step.certificate,
        })
    return out


def run_graph_info(system_text=None, graph_text=None, order_mode="given"):
    """Structural report: fill edges, cliques, elimination tree, PEO check."""
    if system_text is not None:
        prep = prepare(system_text, graph_text, order_mode)
        base, ctx, names = prep.ctx.base, prep.ctx, prep.ring.names
    elif graph_text is not None:
        base = parse_graph(graph_text)
        order = (heuristic_order(base) if order_mode == "heuristic"
                 else tuple(range(base.n)))
        ctx = complete_with_order(base, order)
        names = tuple(f"x{i}" for i in range(base.n))
    else:
        raise ValueError("need a system or a graph")
    report = _empty_report()
    report["cliques"] = [{"vars": [names[v] for v in sorted(ctx.clique_at(k))],
                          "H": None}
                         for k in range(ctx.n)]
    report["fill_edges"] = [[names[u], names[v]] for u, v in ctx.fill_edges]
    report["clique_number"] = ctx.clique_number
    report["certified"] = None
    extra = {
        "n": base.n,
        "edges": [[names[u], names[v]] for u, v in base.edges()],
        "order": [names[v] for v in ctx.order],
        "tree": {names[v]: (names[p] if p is not None else None)
                 for v, p in sorted(ctx.parent.items())},
        "order_is_peo_of_input": base == ctx.graph,
    }
    return RunOutcome(report=report, exit_code=EXIT_OK,
                      timings={}), extra


def run_chord_elim(system_text, graph_text=None, level=None,
                   order_mode="given", add_field_eqs=False) -> RunOutcome:
    t0 = time.perf_counter()
    prep = prepare(system_text, graph_text, order_mode, add_field_eqs)
    if level is None:
        level = prep.ctx.n - 1
    if not (0 <= level <= prep.ctx.n - 1):
        raise ValueError(f"level must be between 0 and {prep.ctx.n - 1}")
    t1 = time.perf_counter()
    trace = chordal_eliminate(prep.gens, prep.ctx, level)
    t2 = time.perf_counter()
    report = _empty_report()
    names = prep.ring.names
    report["levels"] = _level_records(trace, names)
    report["final"] = _fmt_all(trace.final)
    report["certified"] = trace.success
    _graph_section(prep, report)
    code = EXIT_OK if trace.success else EXIT_UNCERTIFIED
    return RunOutcome(report=report, exit_code=code,
                      timings={"prepare": t1 - t0, "eliminate": t2 - t1})


def _clique_records(ci, names):
    out = []
    for k in range(ci.ctx.n):
        out.append({
            "vars": [names[v] for v in sorted(ci.ctx.clique_at(k))],
            "H": _fmt_all(ci.H[k]),
        })
    return out


def run_clique_elim(system_text, graph_text=None, order_mode="given",
                    add_field_eqs=False) -> RunOutcome:
    t0 = time.perf_counter()
    prep = prepare(system_text, graph_text, order_mode, add_field_eqs)
    t1 = time.perf_counter()
    ci = cliques_elim(prep.gens, prep.ctx)
    t2 = time.perf_counter()
    report = _empty_report()
    names = prep.ring.names
    report["levels"] = _level_records(ci.trace, names)
    report["cliques"] = _clique_records(ci, names)
    report["certified"] = ci.certified
    _graph_section(prep, report)
    code = EXIT_OK if ci.certified else EXIT_UNCERTIFIED
    return RunOutcome(report=report, exit_code=code,
                      timings={"prepare": t1 - t0, "cliques": t2 - t1})


def run_solve(system_text, graph_text=None, order_mode="given",
              add_field_eqs=False, count_only=False) -> RunOutcome:
    t0 = time.perf_counter()
    prep = prepare(system_text, graph_text, order_mode, add_field_eqs)
    t1 = time.perf_counter()
    ci = cliques_elim(prep.gens, prep.ctx)
    t2 = time.perf_counter()
    report = _empty_report()
    names = prep.ring.names
    field = prep.ring.field
    report["cliques"] = _clique_records(ci, names)
    report["certified"] = ci.certified
    _graph_section(prep, report)
    timings = {"prepare": t1 - t0, "cliques": t2 - t1}
    if not ci.certified:
        return RunOutcome(report=report, exit_code=EXIT_UNCERTIFIED,
                          timings=timings)
    if count_only:
        report["count"] = merge_solutions(ci, count_only=True)
    else:
        sols = merge_solutions(ci)
        report["count"] = len(sols)
        report["solutions"] = [
            {names[v]: field.format(c) for v, c in sorted(s.items())}
            for s in sols]
    t3 = time.perf_counter()
    timings["merge"] = t3 - t2
    return RunOutcome(report=report, exit_code=EXIT_OK, timings=timings)
