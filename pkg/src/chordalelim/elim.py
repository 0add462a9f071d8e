"""Chordal elimination: level-by-level variable elimination guided by the
cliques of a chordal completion, with error-bound ideals and runtime success
certificates.

Each level l splits the current generators by support against the clique of
the eliminated variable, appends a lex Groebner basis to the clique part,
drops the generators still containing the variable, and carries the leading
coefficients (viewed univariate in the eliminated variable) as the level's
error ideal.  A level is certified when the clique part contains an element
whose leading monomial is a pure power of the eliminated variable, or when
the error ideal is the whole ring; certified levels project exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chordal import ChordalContext, graph_of_system
from .groebner import buchberger, is_trivial_ideal
from .poly import (LEX, Lex, dedupe, is_dominated, is_simplicial,
                   leading_coefficient_in)

CERT_DOMINATION = "domination"
CERT_W_TRIVIAL = "w_trivial"
CERT_TRIVIAL_IDEAL = "unit_ideal"
CERT_NONE = "uncertified"


@dataclass
class EliminationStep:
    """One elimination level: its clique split, basis, and byproducts."""

    level: int
    variable: int
    clique: frozenset
    J: list                    # generators supported inside the clique
    K_next: list               # untouched generators
    gb_J: list                 # lex basis of J (in the clique sub-ring)
    J_appended: list           # J with its basis appended, deduplicated
    elim_next: list            # appended generators free of the variable
    coeff: list                # leading coefficients, univariate view
    I_next: list               # elim_next + K_next
    W_next: list               # coeff + K_next
    certificate: str = CERT_NONE

    @property
    def certified(self) -> bool:
        return self.certificate != CERT_NONE


@dataclass
class EliminationTrace:
    """The full run: steps for levels 0 .. L-1 and the resulting ideal."""

    ring: object
    ctx: ChordalContext
    order: Lex
    level: int
    generators: list
    steps: list = field(default_factory=list)
    final: list = field(default_factory=list)
    success: bool = False
    short_circuited: bool = False

    def w_ideals(self):
        return [step.W_next for step in self.steps]

    def certificates(self):
        return [step.certificate for step in self.steps]


def split_generators(gens, clique, variable):
    """Partition generators by clique support.

    Generators supported inside the clique form the first part; the rest are
    untouched.  A generator containing the eliminated variable but not
    supported in the clique means the graph was not a supergraph of the
    system's graph, which is a structural error.
    """
    clique = frozenset(clique)
    J, K = [], []
    for f in gens:
        if f.support() <= clique:
            J.append(f)
        else:
            if variable in f.support():
                raise ValueError(
                    f"generator {f!r} contains x_{variable} but is not "
                    f"supported in its clique; the graph does not cover "
                    f"the system")
            K.append(f)
    return J, K


def eliminate_step(J, K_next, level, variable, clique, order=LEX,
                   append_basis=True) -> EliminationStep:
    """Eliminate one variable from the clique part of the generators."""
    gb = buchberger(J, order)
    if append_basis:
        appended = dedupe(list(J) + list(gb))
    else:
        appended = list(gb)
    elim_next = [f for f in appended if variable not in f.support()]
    coeff = dedupe(leading_coefficient_in(f, variable) for f in appended)
    step = EliminationStep(
        level=level, variable=variable, clique=frozenset(clique),
        J=list(J), K_next=list(K_next), gb_J=list(gb),
        J_appended=appended, elim_next=elim_next, coeff=coeff,
        I_next=dedupe(elim_next + list(K_next)),
        W_next=dedupe(coeff + list(K_next)))
    return step


def _certify_step(step: EliminationStep, order, check_w=True):
    if any(is_dominated(f, step.variable, order=order)
           for f in step.J_appended):
        step.certificate = CERT_DOMINATION
    elif check_w and step.W_next and is_trivial_ideal(step.W_next):
        step.certificate = CERT_W_TRIVIAL
    else:
        step.certificate = CERT_NONE


def chordal_eliminate(gens, ctx: ChordalContext, level: int,
                      append_basis=True, check_w=True) -> EliminationTrace:
    """Eliminate the first ``level`` variables of the context's order.

    Requires the context order to be a perfect elimination ordering of its
    graph and the system's graph to be covered by it.  Returns the trace
    with the approximating ideal, per-level error ideals and certificates;
    ``success`` is True when every level certified, in which case the final
    generators cut out exactly the projection of the input variety.
    """
    from .chordal import is_perfect_elimination_ordering

    gens = dedupe(gens)
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    if not (0 <= level <= ctx.n):
        raise ValueError(f"level {level} out of range 0..{ctx.n}")
    sys_graph = graph_of_system(gens, n=ctx.graph.n)
    if not sys_graph.subgraph_of(ctx.graph):
        raise ValueError("system graph is not contained in the context graph")
    if not is_perfect_elimination_ordering(ctx.graph, ctx.order):
        raise ValueError("context order is not a perfect elimination "
                         "ordering of its graph")
    order = Lex(ctx.order) if ctx.order != tuple(range(ctx.n)) else LEX

    trace = EliminationTrace(ring=ring, ctx=ctx, order=order, level=level,
                             generators=gens)
    current = gens
    for l in range(level):
        v = ctx.vertex_at(l)
        clique = ctx.clique_at(l)
        J, K_next = split_generators(current, clique, v)
        step = eliminate_step(J, K_next, l, v, clique, order,
                              append_basis=append_basis)
        _certify_step(step, order, check_w=check_w)
        trace.steps.append(step)
        current = step.I_next
        if any(f.is_constant() and not f.is_zero() for f in current):
            # unit ideal: every further projection is empty, exactly
            trace.short_circuited = True
            current = [ring.one]
            break

    trace.final = list(current)
    if trace.short_circuited:
        trace.success = True
    else:
        trace.success = all(step.certified for step in trace.steps)
    return trace


@dataclass
class CertificateReport:
    """Per-level certificates plus the global sufficient conditions."""

    levels: list
    success: bool
    all_max_clique_parts_zero_dim: bool
    every_variable_has_dominated_generator: bool
    all_generators_simplicial: bool

    @property
    def tiers(self):
        out = []
        if self.every_variable_has_dominated_generator:
            out.append("dominated_generator_per_variable")
        if self.all_max_clique_parts_zero_dim:
            out.append("zero_dimensional_maximal_cliques")
        if self.all_generators_simplicial:
            out.append("simplicial_generators_genericity_assumed")
        return out


def certify_success(trace: EliminationTrace) -> CertificateReport:
    """Summarize the per-level certificates and which of the global
    sufficient conditions the input satisfies.

    The simplicial tier assumes generic coefficients, which has no finite
    test; it is reported as an assumption, not a proof.
    """
    from .groebner import is_zero_dimensional

    ctx = trace.ctx
    order = trace.order
    levels = [(step.level, step.variable, step.certificate)
              for step in trace.steps]

    per_var = True
    for k in range(ctx.n):
        v = ctx.vertex_at(k)
        if not any(is_dominated(f, v, order=order) for f in trace.generators):
            per_var = False
            break

    zero_dim = True
    by_level = {step.level: step for step in trace.steps}
    for k in ctx.maximal_clique_levels():
        step = by_level.get(k)
        if step is None:
            continue
        clique = sorted(ctx.clique_at(k))
        if not step.J_appended or not is_zero_dimensional(step.J_appended,
                                                          variables=clique):
            zero_dim = False
            break

    simplicial = all(is_simplicial(f) for f in trace.generators)
    return CertificateReport(
        levels=levels, success=trace.success,
        all_max_clique_parts_zero_dim=zero_dim,
        every_variable_has_dominated_generator=per_var,
        all_generators_simplicial=simplicial)


def outer_bound_W(trace: EliminationTrace, level=None):
    """Generators of the combined outer error bound: the intersection of the
    per-level error ideals, each first cut down to the target ring."""
    from .groebner import elimination_ideal, ideal_intersection

    if level is None:
        level = trace.level
    ws = [trace.steps[l].W_next for l in range(level)]
    if not ws:
        return []
    parts = [elimination_ideal(w, level) if w else [] for w in ws]
    out = parts[0]
    for part in parts[1:]:
        if not out or not part:
            return []
        out = ideal_intersection(out, part)
    return out


def check_q_dominated(gens, ctx: ChordalContext):
    """Smallest q such that, within every maximal clique, each variable has
    a generator whose leading monomial is a pure power of it with degree at
    most q.  None if some variable has no such generator."""
    gens = dedupe(gens)
    order = Lex(ctx.order) if ctx.order != tuple(range(ctx.n)) else LEX
    q = 0
    for k in ctx.maximal_clique_levels():
        clique = ctx.clique_at(k)
        local = [f for f in gens if f.support() <= clique]
        for v in sorted(clique):
            ds = [f.leading_monomial(order)[v] for f in local
                  if is_dominated(f, v, order=order) and not f.is_constant()]
            if not ds:
                return None
            q = max(q, min(ds))
    return q
