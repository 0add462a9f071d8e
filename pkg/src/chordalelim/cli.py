"""Command-line client for the solver service.

Every subcommand builds the same request models the HTTP endpoints accept
and dispatches to the shared service operations in-process, so the CLI and
the service cannot drift apart.  Exit codes: 0 on success, 2 when an
elimination ran but could not be certified (results are bounds only), 1 on
any input error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .pipeline import EXIT_INPUT_ERROR, EXIT_OK, report_json_bytes
from .service import models, ops


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _emit(response, json_path):
    report = response.report.model_dump()
    if json_path:
        Path(json_path).write_bytes(report_json_bytes(report))
    return report


def _print_polys(label, polys):
    click.echo(f"{label}:")
    for p in polys:
        click.echo(f"  {p}")


_system_opt = click.option("--system", "system_path", required=True,
                           type=click.Path(), help="system file")
_graph_opt = click.option("--graph", "graph_path", default=None,
                          type=click.Path(), help="graph file covering the system")
_order_opt = click.option("--order", type=click.Choice(["given", "heuristic"]),
                          default="given", show_default=True,
                          help="elimination order: the ring header order or a min-fill heuristic")
_field_eq_opt = click.option("--add-field-equations", is_flag=True,
                             help="append x^p - x for every variable (GF(p) only)")
_json_opt = click.option("--json", "json_path", default=None,
                         type=click.Path(), help="write the JSON report here")


@click.group()
def cli():
    """Eliminate variables and solve sparse polynomial systems by exploiting
    chordal graph structure."""


@cli.command("graph-info")
@click.option("--system", "system_path", default=None, type=click.Path())
@click.option("--graph", "graph_path", default=None, type=click.Path())
@_order_opt
@_json_opt
def graph_info(system_path, graph_path, order, json_path):
    """Show the system graph, its completion, cliques and elimination tree."""
    req = models.GraphInfoRequest(
        system=_read(system_path) if system_path else None,
        graph=_read(graph_path) if graph_path else None,
        order=order)
    resp = ops.graph_info(req)
    _emit(resp, json_path)
    click.echo(f"vertices: {resp.n}")
    click.echo(f"edges: {', '.join('-'.join(e) for e in resp.edges) or '(none)'}")
    click.echo(f"order: {' > '.join(resp.order)}")
    click.echo(f"order is PEO of input: {resp.order_is_peo_of_input}")
    fills = resp.report.fill_edges or []
    click.echo(f"fill edges: {', '.join('-'.join(e) for e in fills) or '(none)'}")
    click.echo(f"clique number: {resp.report.clique_number}")
    for c in resp.report.cliques or []:
        click.echo(f"  clique {{{', '.join(c.vars)}}}")
    click.echo("tree: " + ", ".join(f"{v}->{p}" for v, p in resp.tree.items()
                                    if p is not None))
    sys.exit(EXIT_OK)


@cli.command("chord-elim")
@_system_opt
@_graph_opt
@click.option("--level", type=int, default=None,
              help="how many variables to eliminate (default: all but one)")
@_order_opt
@_field_eq_opt
@_json_opt
def chord_elim(system_path, graph_path, level, order, add_field_equations,
               json_path):
    """Run chordal elimination down to the requested level."""
    req = models.EliminateRequest(system=_read(system_path),
                                  graph=_read(graph_path) if graph_path else None,
                                  level=level, order=order,
                                  add_field_equations=add_field_equations)
    resp = ops.eliminate(req)
    _emit(resp, json_path)
    for lvl in resp.report.levels or []:
        click.echo(f"level {lvl.level} (eliminate {lvl.variable}): "
                   f"{lvl.certificate}")
    _print_polys("final ideal", resp.report.final or [])
    click.echo(f"certified: {resp.report.certified}")
    sys.exit(resp.exit_code)


@cli.command("clique-elim")
@_system_opt
@_graph_opt
@_order_opt
@_field_eq_opt
@_json_opt
def clique_elim(system_path, graph_path, order, add_field_equations,
                json_path):
    """Compute the elimination ideal of every clique of the completion."""
    req = models.SystemRequest(system=_read(system_path),
                               graph=_read(graph_path) if graph_path else None,
                               order=order,
                               add_field_equations=add_field_equations)
    resp = ops.clique_eliminate(req)
    _emit(resp, json_path)
    for c in resp.report.cliques or []:
        click.echo(f"clique {{{', '.join(c.vars)}}}:")
        for p in c.H or []:
            click.echo(f"  {p}")
    click.echo(f"certified: {resp.report.certified}")
    sys.exit(resp.exit_code)


def _solve_common(system_path, graph_path, order, add_field_equations,
                  json_path, count_only):
    req = models.SolveRequest(system=_read(system_path),
                              graph=_read(graph_path) if graph_path else None,
                              order=order,
                              add_field_equations=add_field_equations,
                              count_only=count_only)
    resp = ops.solve(req)
    _emit(resp, json_path)
    if resp.report.certified:
        click.echo(f"count: {resp.report.count}")
        for s in resp.report.solutions or []:
            click.echo("  " + ", ".join(f"{k}={v}" for k, v in sorted(s.items())))
    else:
        click.echo("uncertified: clique ideals are bounds only; "
                   "refusing to merge")
    sys.exit(resp.exit_code)


@cli.command("solve")
@_system_opt
@_graph_opt
@_order_opt
@_field_eq_opt
@_json_opt
def solve(system_path, graph_path, order, add_field_equations, json_path):
    """Enumerate the variety by merging clique solutions (prime fields)."""
    _solve_common(system_path, graph_path, order, add_field_equations,
                  json_path, count_only=False)


@cli.command("count")
@_system_opt
@_graph_opt
@_order_opt
@_field_eq_opt
@_json_opt
def count(system_path, graph_path, order, add_field_equations, json_path):
    """Count the variety without materializing it."""
    _solve_common(system_path, graph_path, order, add_field_equations,
                  json_path, count_only=True)


@cli.group()
def gen():
    """Generate example systems."""


@gen.command("colorings")
@click.option("--graph", "graph_path", required=True, type=click.Path())
@click.option("-q", "--colors", type=int, required=True)
@click.option("--field", default="Q", show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None)
def gen_colorings_cmd(graph_path, colors, field, output):
    """Vertex coloring equations for a graph file."""
    resp = ops.generate_colorings(models.GenColoringsRequest(
        graph=_read(graph_path), colors=colors, field=field))
    if resp.warning:
        click.echo(f"warning: {resp.warning}", err=True)
    _write_system(resp.system, output)


@gen.command("subsetsum")
@click.option("--values", required=True,
              help="comma-separated integer values")
@click.option("--target", type=int, required=True)
@click.option("--field", default="Q", show_default=True)
@click.option("-o", "--output", type=click.Path(), default=None)
def gen_subsetsum_cmd(values, target, field, output):
    """Partial-sum subset-sum equations on a path graph."""
    try:
        parsed = [int(v) for v in values.split(",") if v.strip()]
    except ValueError as exc:
        raise ValueError(f"bad values list {values!r}") from exc
    resp = ops.generate_subset_sum(models.GenSubsetSumRequest(
        values=parsed, target=target, field=field))
    _write_system(resp.system, output)


@gen.command("diffeq")
@click.option("-n", "--points", type=int, required=True)
@click.option("-o", "--output", type=click.Path(), default=None)
def gen_diffeq_cmd(points, output):
    """Cubic finite-difference equations on a chain of triangles."""
    resp = ops.generate_diffeq(models.GenDiffeqRequest(points=points))
    _write_system(resp.system, output)


def _write_system(text, output):
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)
    sys.exit(EXIT_OK)


@cli.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app
    uvicorn.run(app, host=host, port=port)


def main():
    try:
        cli.main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_INPUT_ERROR)
    except click.Abort:
        sys.exit(EXIT_INPUT_ERROR)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)


if __name__ == "__main__":
    main()
