"""System files and problem generators.

A system file declares its ring on the first non-comment line
(``ring x0 x1 ... over Q`` or ``over GF(p)``; the declared variable order is
the elimination order, first name largest) and lists one polynomial per
following line.  ``#`` starts a comment.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import QQ, Field, format_field, parse_field
from .chordal import Graph
from .poly import Ring, format_polynomial, parse_polynomial


def parse_system(text: str):
    """Parse a system file into its ring and generator list."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty system file")
    head = lines[0].split()
    if len(head) < 4 or head[0] != "ring" or head[-2] != "over":
        raise ValueError(f"bad ring header {lines[0]!r}; expected "
                         f"'ring <names...> over <field>'")
    names = head[1:-2]
    if not names:
        raise ValueError("ring header declares no variables")
    field = parse_field(head[-1])
    ring = Ring(tuple(names), field)
    polys = [parse_polynomial(ln, ring) for ln in lines[1:]]
    return ring, polys


def format_system(ring: Ring, polys) -> str:
    head = f"ring {' '.join(ring.names)} over {format_field(ring.field)}"
    body = [format_polynomial(f) for f in polys]
    return "\n".join([head] + body) + "\n"


def field_equations(ring: Ring):
    """The equations x^p - x for every variable of a prime-field ring."""
    if ring.field.kind != "GF":
        raise ValueError("field equations need a prime field")
    p = ring.field.modulus
    out = []
    for i in range(ring.nvars):
        x = ring.var(i)
        out.append(x ** p - x)
    return out


# ---------------------------------------------------------------------------
# generators

def gen_colorings(graph: Graph, q: int, field: Field = QQ):
    """Coloring equations for a graph: one root-of-unity equation per vertex
    and one difference-quotient equation per edge, so the system's graph is
    exactly the input graph.

    Over GF(p) the encoding is faithful when p = 1 (mod q); otherwise a
    warning flag is attached to the return value.
    """
    if q < 2:
        raise ValueError("need at least two colors")
    ring = Ring(tuple(f"x{i}" for i in range(graph.n)), field)
    gens = []
    for i in range(graph.n):
        gens.append(ring.var(i) ** q - 1)
    for (i, j) in graph.edges():
        terms = {}
        for a in range(q):
            m = [0] * ring.nvars
            m[i] = a
            m[j] = q - 1 - a
            terms[tuple(m)] = 1
        gens.append(ring.from_dict(terms))
    faithful = field.kind != "GF" or field.modulus % q == 1
    return ring, gens, faithful


def gen_subset_sum(values, target, field: Field = QQ):
    """Partial-sum encoding of subset sum: s_0 = 0, s_n = target, and each
    step either keeps the running sum or adds the next value.  The system's
    graph is the path s_0 - s_1 - ... - s_n."""
    values = list(values)
    n = len(values)
    ring = Ring(tuple(f"s{i}" for i in range(n + 1)), field)
    gens = [ring.var(0)]
    for i in range(1, n + 1):
        step = ring.var(i) - ring.var(i - 1)
        gens.append(step * (step - values[i - 1]))
    gens.append(ring.var(n) - target)
    return ring, gens


def gen_diffeq(n: int):
    """Cubic finite-difference equations for x'' + (x+t)^3/2 = 0 with zero
    boundary values, on an n-point grid with spacing 1/(n+1).  All the
    generated polynomials are simplicial, and the system's graph is a chain
    of triangles."""
    if n < 2:
        raise ValueError("need at least two grid points")
    ring = Ring(tuple(f"x{i}" for i in range(1, n + 1)), QQ)
    h = Fraction(1, n + 1)
    c = h * h / 2

    def cubic(i):
        # (x_i + t_i)^3 scaled by h^2 / 2
        t = Fraction(i + 1, n + 1)
        x = ring.var(i)
        return (x + t) ** 3 * c

    gens = []
    for i in range(n):
        f = 2 * ring.var(i) + cubic(i)
        if i > 0:
            f = f - ring.var(i - 1)
        if i < n - 1:
            f = f - ring.var(i + 1)
        gens.append(f)
    return ring, gens
