"""Graph layer: system graphs, chordality, cliques and elimination trees.

Vertex i corresponds to variable x_i, and the built-in vertex order is the
ring order (index 0 is the largest vertex).  A :class:`ChordalContext` also
supports an arbitrary priority permutation, which the clique-ideal machinery
uses for its reordered inner eliminations; the public entry points all work
with the built-in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class Graph:
    """Undirected simple graph on vertices 0 .. n-1."""

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("negative vertex count")
        self.n = n
        self.adj = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int):
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self):
        return sorted((u, v) for u in range(self.n) for v in self.adj[u]
                      if u < v)

    def copy(self) -> "Graph":
        g = Graph(self.n)
        for u in range(self.n):
            g.adj[u] = set(self.adj[u])
        return g

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        return all(self.has_edge(vs[i], vs[j])
                   for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def subgraph_of(self, other: "Graph") -> bool:
        return (self.n == other.n
                and all(self.adj[u] <= other.adj[u] for u in range(self.n)))

    def __eq__(self, other):
        return (isinstance(other, Graph) and other.n == self.n
                and other.adj == self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges())})"


def parse_graph(text: str) -> Graph:
    """Read a graph file: first line 'n m', then m lines 'u v'.

    Lines starting with '#' and blank lines are skipped.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad graph header {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edges, found {len(lines) - 1}")
    g = Graph(n)
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        g.add_edge(int(parts[0]), int(parts[1]))
    return g


def format_graph(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def graph_of_system(polys, n=None) -> Graph:
    """The graph whose edges join variables sharing a generator."""
    if n is None:
        if not polys:
            raise ValueError("cannot infer vertex count from no polynomials")
        n = polys[0].ring.nvars
    g = Graph(n)
    for f in polys:
        sup = sorted(f.support())
        for i in range(len(sup)):
            for j in range(i + 1, len(sup)):
                g.add_edge(sup[i], sup[j])
    return g


def mcs(graph: Graph, start=(), within=None):
    """Maximum cardinality search.

    Repeatedly picks the unvisited vertex with the most visited neighbours
    (smallest index on ties).  Returns the visit sequence, which is a
    reversed perfect elimination ordering whenever the graph is chordal.
    An optional starting clique is visited first.  When ``within`` is given
    the search is confined to that vertex subset.
    """
    start = sorted(start)
    if not graph.is_clique(start):
        raise ValueError("mcs start set is not a clique")
    pool = set(range(graph.n)) if within is None else set(within)
    if not set(start) <= pool:
        raise ValueError("mcs start set outside the searched vertices")
    visited = []
    in_seq = [False] * graph.n
    weight = [0] * graph.n
    for v in start:
        visited.append(v)
        in_seq[v] = True
        for u in graph.adj[v]:
            weight[u] += 1
    while len(visited) < len(pool):
        best = max((weight[v], -v) for v in pool if not in_seq[v])
        v = -best[1]
        visited.append(v)
        in_seq[v] = True
        for u in graph.adj[v]:
            weight[u] += 1
    return visited


def _higher_neighbors(graph: Graph, order, pos):
    """Neighbour sets restricted to later positions, per position."""
    out = []
    for k, v in enumerate(order):
        out.append({u for u in graph.adj[v] if pos[u] > k})
    return out


def is_perfect_elimination_ordering(graph: Graph, order=None) -> bool:
    """True iff each vertex's later neighbours induce a clique."""
    order = tuple(order) if order is not None else tuple(range(graph.n))
    pos = {v: k for k, v in enumerate(order)}
    for nbrs in _higher_neighbors(graph, order, pos):
        if not graph.is_clique(nbrs):
            return False
    return True


@dataclass
class ChordalContext:
    """A completed ordered graph with its cliques and elimination tree.

    ``order`` is the priority sequence: ``order[0]`` is the largest vertex,
    eliminated first.  ``cliques[k]`` is vertex ``order[k]`` together with
    its later neighbours in the completed graph, and ``parent[v]`` is the
    largest vertex below v adjacent to it (None for roots).
    """

    base: Graph
    graph: Graph
    order: tuple
    fill_edges: tuple
    cliques: tuple
    parent: dict

    pos: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.pos:
            self.pos = {v: k for k, v in enumerate(self.order)}

    @property
    def n(self) -> int:
        return self.graph.n

    def vertex_at(self, level: int) -> int:
        return self.order[level]

    def clique_at(self, level: int) -> frozenset:
        return self.cliques[level]

    def clique_of_vertex(self, v: int) -> frozenset:
        return self.cliques[self.pos[v]]

    @property
    def clique_number(self) -> int:
        return max((len(c) for c in self.cliques), default=0)

    def maximal_clique_levels(self):
        """Levels whose clique is not contained in another clique."""
        out = []
        for k, c in enumerate(self.cliques):
            if not any(c < d for d in self.cliques):
                out.append(k)
        return out


def complete_with_order(graph: Graph, order=None) -> ChordalContext:
    """Complete the graph so the given order is a perfect elimination
    ordering, recording the fill edges, cliques and elimination tree."""
    order = tuple(order) if order is not None else tuple(range(graph.n))
    if sorted(order) != list(range(graph.n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = {v: k for k, v in enumerate(order)}
    g = graph.copy()
    fill = []
    for k in range(graph.n):
        v = order[k]
        later = sorted((u for u in g.adj[v] if pos[u] > k),
                       key=lambda u: pos[u])
        for i in range(len(later)):
            for j in range(i + 1, len(later)):
                if not g.has_edge(later[i], later[j]):
                    g.add_edge(later[i], later[j])
                    fill.append(tuple(sorted((later[i], later[j]))))
    cliques = []
    parent = {}
    for k in range(graph.n):
        v = order[k]
        later = {u for u in g.adj[v] if pos[u] > k}
        cliques.append(frozenset({v} | later))
        parent[v] = min(later, key=lambda u: pos[u]) if later else None
    return ChordalContext(base=graph, graph=g, order=order,
                          fill_edges=tuple(sorted(set(fill))),
                          cliques=tuple(cliques), parent=parent, pos=pos)


def heuristic_order(graph: Graph):
    """Greedy minimum-fill elimination order (min-degree, then index, on
    ties).  Position 0 is eliminated first, i.e. is the largest vertex."""
    g = graph.copy()
    alive = set(range(graph.n))
    order = []
    while alive:
        best = None
        for v in sorted(alive):
            nbrs = [u for u in g.adj[v] if u in alive]
            missing = sum(1 for i in range(len(nbrs))
                          for j in range(i + 1, len(nbrs))
                          if not g.has_edge(nbrs[i], nbrs[j]))
            key = (missing, len(nbrs), v)
            if best is None or key < best[0]:
                best = (key, v, nbrs)
        _, v, nbrs = best
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                if not g.has_edge(nbrs[i], nbrs[j]):
                    g.add_edge(nbrs[i], nbrs[j])
        alive.remove(v)
        order.append(v)
    return tuple(order)


def elimination_tree(ctx: ChordalContext) -> dict:
    """Parent map of the elimination tree (None at roots)."""
    return dict(ctx.parent)


def is_lower_set(ctx: ChordalContext, vertices) -> bool:
    """True iff the set is closed under taking elimination-tree parents."""
    vs = set(vertices)
    return all(ctx.parent[v] is None or ctx.parent[v] in vs for v in vs)


def random_chordal_graph(n: int, rng, density=0.4) -> Graph:
    """Random chordal graph built by a randomized fill construction: draw a
    random graph and keep its completion along a random order."""
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                g.add_edge(u, v)
    order = list(range(n))
    rng.shuffle(order)
    return complete_with_order(g, order).graph
