"""Clique elimination ideals, solution merging and counting.

After a successful chordal elimination, each clique of the completed graph
carries an ideal describing exactly the projection of the variety onto the
clique's variables.  The family of these ideals is a sparse stand-in for a
lex Groebner basis: solutions are read off clique by clique and merged along
the elimination tree, joining on the clique/parent separators.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import PrimeField
from .chordal import ChordalContext, Graph, complete_with_order, mcs
from .elim import EliminationTrace, chordal_eliminate
from .groebner import (buchberger, is_groebner_basis, is_trivial_ideal,
                       is_zero_dimensional, standard_monomial_count)
from .poly import LEX, dedupe


@dataclass
class CliqueIdeals:
    """Per-clique elimination ideals plus the tree used to merge solutions."""

    ctx: ChordalContext
    H: list                      # indexed by level, supported in cliques[level]
    trace: EliminationTrace
    certified: bool
    inner_certified: list = field(default_factory=list)

    def basis(self, level: int):
        return buchberger(self.H[level], LEX)


def _appended_parts(trace: EliminationTrace):
    """The per-level clique generators, with the root level's remainder."""
    n = trace.ctx.n
    parts = [None] * n
    for step in trace.steps:
        parts[step.level] = step.J_appended
    parts[n - 1] = trace.final
    return parts


def lower_set_ideal(trace: EliminationTrace, vertices):
    """Generators whose zero set is the projection onto a lower set: the sum
    of the clique parts of its members."""
    from .chordal import is_lower_set

    ctx = trace.ctx
    if not is_lower_set(ctx, vertices):
        raise ValueError("not a lower set of the elimination tree")
    if trace.level < ctx.n - 1:
        raise ValueError("trace must run through every level")
    if trace.short_circuited:
        return [trace.ring.one] if vertices else []
    parts = _appended_parts(trace)
    out = []
    for v in sorted(vertices, key=lambda u: ctx.pos[u]):
        out.extend(parts[ctx.pos[v]])
    return dedupe(out)


def _restricted_graph(graph: Graph, vertices) -> Graph:
    sub = Graph(graph.n)
    vs = set(vertices)
    for u in vs:
        for v in graph.adj[u]:
            if v in vs and u < v:
                sub.add_edge(u, v)
    return sub


def cliques_elim(gens, ctx: ChordalContext) -> CliqueIdeals:
    """Compute the clique elimination ideals along the elimination tree.

    The root clique keeps its part of the trace; every other clique is
    obtained by eliminating, inside the union of its parent's clique and its
    own vertex, the vertices outside it, under an order produced by a
    maximum cardinality search started at the clique.  Uncertified inner
    runs flag the result; the ideals are still returned as bounds.
    """
    n = ctx.n
    trace = chordal_eliminate(gens, ctx, n - 1)
    if trace.short_circuited:
        # unit ideal: every clique variety is empty
        one = trace.ring.one
        return CliqueIdeals(ctx=ctx, H=[[one] for _ in range(n)],
                            trace=trace, certified=trace.success,
                            inner_certified=[True] * n)
    parts = _appended_parts(trace)
    H = [None] * n
    inner_certified = [True] * n
    certified = trace.success

    for level in range(n - 1, -1, -1):
        v = ctx.vertex_at(level)
        parent = ctx.parent[v]
        if parent is None:
            H[level] = list(parts[level])
            continue
        plevel = ctx.pos[parent]
        C = set(ctx.clique_at(plevel)) | {v}
        start = ctx.clique_at(level)
        sub = _restricted_graph(ctx.graph, C)
        sigma = mcs(sub, start=sorted(start), within=C)
        rest = sorted(set(range(n)) - C)
        inner_order = tuple(reversed(sigma)) + tuple(rest)
        inner_ctx = complete_with_order(sub, inner_order)
        inner_gens = dedupe(list(H[plevel]) + list(parts[level]))
        inner = chordal_eliminate(inner_gens, inner_ctx, len(C) - len(start))
        H[level] = list(inner.final)
        inner_certified[level] = inner.success
        certified = certified and inner.success

    if certified:
        # an infeasible component empties the whole variety, which the other
        # components' ideals cannot express; collapse explicitly
        roots = [k for k in range(n) if ctx.parent[ctx.vertex_at(k)] is None]
        if any(is_trivial_ideal(H[k]) for k in roots):
            one = trace.ring.one
            H = [[one] for _ in range(n)]

    return CliqueIdeals(ctx=ctx, H=H, trace=trace, certified=certified,
                        inner_certified=inner_certified)


# ---------------------------------------------------------------------------
# point enumeration and merging over prime fields

def _clique_points(gens, clique, p):
    """All points of the clique's coordinate space killing the generators.

    Depth-first over the clique variables, smallest variable first, pruning
    with every generator as soon as its support is fully assigned.
    """
    variables = sorted(clique, reverse=True)
    varset = set(clique)
    for f in gens:
        if not f.support() <= varset:
            raise ValueError("generator leaves the clique's variables")
    points = []

    def rec(idx, assignment):
        if idx == len(variables):
            points.append(dict(assignment))
            return
        v = variables[idx]
        assigned = set(list(assignment) + [v])
        active = [f for f in gens
                  if v in f.support() and f.support() <= assigned]
        for c in range(p):
            assignment[v] = c
            ok = True
            for f in active:
                if f.subs(assignment).constant_value() != 0:
                    ok = False
                    break
            if ok:
                rec(idx + 1, assignment)
        del assignment[v]

    # generators with no variables at all: nonzero constants kill everything
    if any(f.is_constant() and not f.is_zero() for f in gens):
        return []
    rec(0, {})
    return points


def enumerate_clique_varieties(ci: CliqueIdeals):
    """The zero set of each clique ideal, by exhaustive evaluation over the
    clique's coordinates.  Prime fields only; every ideal must be zero
    dimensional on its clique."""
    field = ci.trace.ring.field
    if not isinstance(field, PrimeField):
        raise ValueError("point enumeration needs a prime field")
    out = []
    for level in range(ci.ctx.n):
        clique = sorted(ci.ctx.clique_at(level))
        gens = ci.H[level]
        if not gens or not is_zero_dimensional(gens, variables=clique):
            raise ValueError(
                f"clique ideal at level {level} is not zero dimensional")
        out.append(_clique_points(gens, clique, field.modulus))
    return out


def _sep_key(point, separator):
    return tuple(point[v] for v in separator)


def merge_solutions(ci: CliqueIdeals, count_only=False):
    """All points of the variety, or only their count.

    Prime fields: traverses the elimination tree root-first, joining clique
    points on the separator shared with the parent.  Counting mode runs a
    dynamic program over separator assignments without materializing points.
    Over the rationals only counting is offered, via standard monomials of
    the recomposed ideal.
    """
    if not ci.certified:
        raise ValueError("merging needs a certified clique decomposition")
    ctx = ci.ctx
    field = ci.trace.ring.field
    if not isinstance(field, PrimeField):
        if not count_only:
            raise ValueError("point enumeration over Q is unsupported; "
                             "use counting")
        gens = dedupe(g for part in ci.H for g in part)
        return standard_monomial_count(gens)

    p = field.modulus
    n = ctx.n
    points = [_clique_points(ci.H[level], sorted(ctx.clique_at(level)), p)
              for level in range(n)]
    children = {level: [] for level in range(n)}
    roots = []
    separators = [None] * n
    for level in range(n):
        v = ctx.vertex_at(level)
        parent = ctx.parent[v]
        separators[level] = sorted(ctx.clique_at(level) - {v})
        if parent is None:
            roots.append(level)
        else:
            children[ctx.pos[parent]].append(level)
    by_sep = []
    for level in range(n):
        grouped = {}
        for pt in points[level]:
            grouped.setdefault(_sep_key(pt, separators[level]), []).append(pt)
        by_sep.append(grouped)

    if count_only:
        cache = {}

        def branch(level, sep_assign):
            key = (level, sep_assign)
            if key not in cache:
                cache[key] = sum(weight(level, pt)
                                 for pt in by_sep[level].get(sep_assign, ()))
            return cache[key]

        def weight(level, pt):
            w = 1
            for c in children[level]:
                b = branch(c, _sep_key(pt, separators[c]))
                if b == 0:
                    raise AssertionError(
                        "certified merge found a non-extendable point")
                w *= b
            return w

        total = 1
        for r in roots:
            total *= sum(weight(r, pt) for pt in points[r])
        return total

    def expand(level, pt):
        """All variety points of the subtree at this level extending pt."""
        partials = [dict(pt)]
        for c in children[level]:
            matching = by_sep[c].get(_sep_key(pt, separators[c]))
            if not matching:
                raise AssertionError(
                    "certified merge found a non-extendable point")
            new_partials = []
            for partial in partials:
                for q in matching:
                    for ext in expand(c, q):
                        merged = dict(partial)
                        merged.update(ext)
                        new_partials.append(merged)
            partials = new_partials
        return partials

    solutions = [{}]
    for r in roots:
        component = []
        for pt in points[r]:
            component.extend(expand(r, pt))
        new_solutions = []
        for sol in solutions:
            for comp in component:
                merged = dict(sol)
                merged.update(comp)
                new_solutions.append(merged)
        solutions = new_solutions
    solutions.sort(key=lambda s: tuple(s[v] for v in sorted(s)))
    return solutions


def degree_set(gens, v: int):
    """Degrees in x_v across a minimal lex basis of the ideal."""
    return {g.degree_in(v) for g in buchberger(gens, LEX)}


@dataclass
class ConcatReport:
    generators: list
    is_basis: bool
    shape_position: bool


def shape_position_check(gens) -> bool:
    """True iff the reduced lex basis consists of one univariate polynomial
    in the smallest variable and, for every other variable, a polynomial
    with leading monomial that variable (tail in the smallest variable)."""
    gens = dedupe(gens)
    if not gens:
        return False
    n = gens[0].ring.nvars
    gb = buchberger(gens, LEX)
    if len(gb) != n:
        return False
    last = n - 1
    seen = set()
    for g in gb:
        lm = g.leading_monomial(LEX)
        sup = [i for i, e in enumerate(lm) if e]
        if len(sup) != 1:
            return False
        v = sup[0]
        if v in seen:
            return False
        seen.add(v)
        if v != last:
            if lm[v] != 1 or not g.support() <= {v, last}:
                return False
        else:
            if not g.support() <= {last}:
                return False
    return seen == set(range(n))


def concat_clique_gbs(ci: CliqueIdeals) -> ConcatReport:
    """Concatenate the lex bases of all clique ideals and report whether the
    concatenation is itself a basis and whether the full ideal is in shape
    position."""
    concat = dedupe(g for level in range(ci.ctx.n)
                    for g in ci.basis(level))
    return ConcatReport(
        generators=concat,
        is_basis=is_groebner_basis(concat, LEX),
        shape_position=shape_position_check(ci.trace.generators))
