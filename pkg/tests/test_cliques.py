import itertools

import pytest

from chordalelim.arith import PrimeField, QQ
from chordalelim.chordal import Graph, complete_with_order, graph_of_system
from chordalelim.cliques import (cliques_elim, concat_clique_gbs, degree_set,
                                 enumerate_clique_varieties, lower_set_ideal,
                                 merge_solutions, shape_position_check)
from chordalelim.elim import chordal_eliminate
from chordalelim.groebner import (buchberger, elimination_ideal,
                                  min_pure_power_degree, reduces_to_zero,
                                  same_ideal, standard_monomial_count)
from chordalelim.poly import Ring, parse_polynomial
from chordalelim.systems import field_equations, gen_colorings

from conftest import (TEN_VERTEX_EDGES, fp_zero_set, poly, polys,
                      random_system, ring_p, ring_q)


def ctx_of(gens):
    return complete_with_order(graph_of_system(gens))


@pytest.fixture
def tree_system():
    r = ring_q("x0", "x1", "x2", "x3")
    return r, polys(r, "x0^4 - 1", "x0^2 + x2", "x1^2 + x2", "x2^2 + x3")


def pinned_coloring_system(ring, q):
    """The 10-vertex coloring system with the last vertex pinned to 1."""
    gens = [parse_polynomial(f"x{i}^{q} - 1", ring) for i in range(9)]
    gens.append(parse_polynomial("x9 - 1", ring))
    for (i, j) in TEN_VERTEX_EDGES:
        terms = {}
        for a in range(q):
            m = [0] * 10
            m[i], m[j] = a, q - 1 - a
            terms[tuple(m)] = 1
        gens.append(ring.from_dict(terms))
    return gens


# ---------------------------------------------------------------------------
# lower sets

def test_lower_set_suffix_equals_level_ideal(tree_system):
    r, gens = tree_system
    ctx = ctx_of(gens)
    trace = chordal_eliminate(gens, ctx, 3)
    for level in (1, 2, 3):
        lam = set(range(level, 4))
        got = lower_set_ideal(trace, lam)
        want = trace.steps[level - 1].I_next if level else gens
        assert same_ideal(got, want)


def test_lower_set_singleton_root(tree_system):
    _, gens = tree_system
    trace = chordal_eliminate(gens, ctx_of(gens), 3)
    got = lower_set_ideal(trace, {3})
    assert same_ideal(got, trace.final)


def test_lower_set_empty(tree_system):
    _, gens = tree_system
    trace = chordal_eliminate(gens, ctx_of(gens), 3)
    assert lower_set_ideal(trace, set()) == []


def test_lower_set_rejects_non_lower(tree_system):
    _, gens = tree_system
    trace = chordal_eliminate(gens, ctx_of(gens), 3)
    with pytest.raises(ValueError):
        lower_set_ideal(trace, {0})


def test_lower_set_projection(rng):
    for _ in range(6):
        n, p = 4, 3
        ring, gens = random_system(rng, n=n, p=p)
        gens = gens + field_equations(ring)
        ctx = ctx_of(gens)
        trace = chordal_eliminate(gens, ctx, n - 1)
        if trace.short_circuited:
            continue
        pts = fp_zero_set(gens, p, n)
        lam = {v for v in range(n)
               if ctx.parent[v] is None or rng.random() < 0.6}
        # close under parents
        changed = True
        while changed:
            changed = False
            for v in list(lam):
                par = ctx.parent[v]
                if par is not None and par not in lam:
                    lam.add(par)
                    changed = True
        ideal = lower_set_ideal(trace, lam)
        zs = fp_zero_set(ideal, p, n) if ideal else set(
            itertools.product(range(p), repeat=n))
        assert {tuple(pt[v] for v in sorted(lam)) for pt in zs} == \
            {tuple(pt[v] for v in sorted(lam)) for pt in pts}


# ---------------------------------------------------------------------------
# clique ideals

def test_single_clique_system_gives_full_basis():
    r = ring_q("x0", "x1")
    gens = polys(r, "x0^2 + x1", "x1^2 - 2")
    ci = cliques_elim(gens, ctx_of(gens))
    assert ci.certified
    assert ci.basis(0) == buchberger(gens)


def test_tree_system_last_clique(tree_system):
    r, gens = tree_system
    ci = cliques_elim(gens, ctx_of(gens))
    assert ci.certified
    # oracle: restrict the full lex basis to the clique's variables
    oracle = [g for g in buchberger(gens) if g.support() <= {2, 3}]
    assert ci.basis(2) == oracle
    assert ci.basis(2) == polys(r, "x2^2 - 1", "x3 + 1")


def test_all_cliques_match_full_basis_restriction(rng):
    for _ in range(8):
        n, p = 4, 3
        ring, gens = random_system(rng, n=n, p=p)
        gens = gens + field_equations(ring)
        ctx = ctx_of(gens)
        ci = cliques_elim(gens, ctx)
        if not ci.certified or ci.trace.short_circuited:
            continue
        pts = fp_zero_set(gens, p, n)
        for level in range(n):
            clique = sorted(ctx.clique_at(level))
            got = fp_zero_set(ci.H[level], p, n)
            assert {tuple(pt[v] for v in clique) for pt in got} == \
                {tuple(pt[v] for v in clique) for pt in pts}


def test_pinned_coloring_clique_ideals():
    ring = Ring(tuple(f"x{i}" for i in range(10)), QQ)
    gens = pinned_coloring_system(ring, 3)
    ctx = complete_with_order(Graph(10, TEN_VERTEX_EDGES))
    assert ctx.fill_edges == ((5, 7), (5, 9), (7, 9))
    ci = cliques_elim(gens, ctx)
    assert ci.certified
    assert ci.basis(0) == polys(ring, "x0 + x6 + 1", "x6^2 + x6 + 1",
                                "x7 - 1")
    assert ci.basis(5) == polys(ring, "x5 - 1", "x7 - 1", "x8^2 + x8 + 1",
                                "x9 - 1")
    assert ci.basis(6) == polys(ring, "x6 + x8 + 1", "x7 - 1",
                                "x8^2 + x8 + 1", "x9 - 1")
    assert merge_solutions(ci, count_only=True) == 2


# ---------------------------------------------------------------------------
# enumeration

def test_enumerate_square_roots():
    r = ring_p(7, "x2")
    gens = polys(r, "x2^2 - 1")
    ci = cliques_elim(gens, ctx_of(gens))
    pts = enumerate_clique_varieties(ci)
    assert pts[0] == [{0: 1}, {0: 6}]


def test_enumerate_unit_ideal_is_empty():
    r = ring_p(5, "x0", "x1")
    gens = polys(r, "x0 + x1", "x0 + x1 + 1")
    ci = cliques_elim(gens, ctx_of(gens))
    assert enumerate_clique_varieties(ci) == [[], []]


def test_enumerate_needs_prime_field(tree_system):
    _, gens = tree_system
    ci = cliques_elim(gens, ctx_of(gens))
    with pytest.raises(ValueError):
        enumerate_clique_varieties(ci)


def test_four_coloring_variant_of_pinned_graph():
    ring = Ring(tuple(f"x{i}" for i in range(10)), PrimeField(13))
    gens = pinned_coloring_system(ring, 4)
    ctx = complete_with_order(Graph(10, TEN_VERTEX_EDGES))
    ci = cliques_elim(gens, ctx)
    assert ci.certified
    pts = enumerate_clique_varieties(ci)
    assert (len(pts[0]), len(pts[5]), len(pts[6])) == (18, 27, 12)
    assert merge_solutions(ci, count_only=True) == 528


# ---------------------------------------------------------------------------
# merging

def test_triangle_coloring_solutions():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])
    ring, gens, _ = gen_colorings(g, 3, PrimeField(7))
    ci = cliques_elim(gens, ctx_of(gens))
    sols = merge_solutions(ci)
    assert len(sols) == 6 == merge_solutions(ci, count_only=True)
    brute = fp_zero_set(gens, 7, 3)
    assert {tuple(s[v] for v in range(3)) for s in sols} == brute


def test_merge_refuses_uncertified():
    r = ring_q("x0", "x1", "x2")
    gens = polys(r, "x0*x1 + 1", "x1 + x2", "x1*x2")
    ci = cliques_elim(gens, ctx_of(gens))
    assert not ci.certified
    with pytest.raises(ValueError):
        merge_solutions(ci)


def test_merge_matches_enumeration_and_count(rng):
    for _ in range(8):
        n, p = 4, 3
        ring, gens = random_system(rng, n=n, p=p)
        gens = gens + field_equations(ring)
        ci = cliques_elim(gens, ctx_of(gens))
        if not ci.certified:
            continue
        brute = fp_zero_set(gens, p, n)
        sols = merge_solutions(ci)
        assert {tuple(s[v] for v in range(n)) for s in sols} == brute
        assert merge_solutions(ci, count_only=True) == len(brute)
        if brute:
            assert standard_monomial_count(gens) == len(brute)


# ---------------------------------------------------------------------------
# degree sets and initial ideals

def test_degree_set_univariate():
    r = ring_q("x0", "x1")
    assert degree_set(polys(r, "x1^2 - 1"), 1) == {2}


def test_degree_set_of_level_two(tree_system):
    r, gens = tree_system
    # minimal basis of the second remainder ideal is {x2^2 - 1, x3 + 1}
    ideal = polys(r, "x2^2 - 1", "x2^2 + x3")
    assert degree_set(ideal, 2) == {0, 2}


def test_degree_sets_agree_between_levels_and_cliques(rng):
    # the degree sets encode projection fiber sizes, which live in the
    # positive degrees; the zero entry additionally matches whenever the
    # clique has a second variable for its basis to use
    checked = 0
    for _ in range(10):
        n, p = 4, 3
        ring, gens = random_system(rng, n=n, p=p)
        gens = gens + field_equations(ring)
        ci = cliques_elim(gens, ctx_of(gens))
        if not ci.certified or ci.trace.short_circuited:
            continue
        ctx = ci.ctx
        for level in range(n):
            ideal_l = elimination_ideal(gens, level)
            d_level = degree_set(ideal_l, level)
            d_clique = degree_set(ci.H[level], level)
            assert d_level - {0} == d_clique - {0}
            if len(ctx.clique_at(level)) > 1 or level == n - 1:
                assert d_level == d_clique
            assert min_pure_power_degree(gens, level) == \
                min_pure_power_degree(ci.H[level], level)
            checked += 1
    assert checked


# ---------------------------------------------------------------------------
# concatenated bases and shape position

def test_shape_position_concatenation_is_basis():
    # distinct points with distinct last coordinates put the ideal in shape
    # position: x0 - g(x2), x1 - h(x2), univariate in x2
    r = ring_p(7, "x0", "x1", "x2")
    gens = polys(r, "x0 - x2^2", "x1 - x2 - 1", "x2^3 - x2")
    assert shape_position_check(gens)
    ci = cliques_elim(gens, ctx_of(gens))
    report = concat_clique_gbs(ci)
    assert report.shape_position
    assert report.is_basis


def test_path_system_concatenation_is_not_basis():
    r = ring_q("x0", "x1", "x2")
    gens = polys(r, "x0*x2 - 1", "x1*x2 - 1")
    ci = cliques_elim(gens, ctx_of(gens))
    report = concat_clique_gbs(ci)
    assert not report.is_basis
    assert poly(r, "x0 - x1") not in report.generators


def test_single_clique_concatenation_trivially_basis():
    r = ring_q("x0", "x1")
    gens = polys(r, "x0^2 + x1", "x1^2 - 2")
    ci = cliques_elim(gens, ctx_of(gens))
    report = concat_clique_gbs(ci)
    assert report.is_basis
    assert same_ideal(report.generators, gens)


# ---------------------------------------------------------------------------
# recomposition

def test_recomposition(rng):
    for _ in range(8):
        n, p = 4, 3
        ring, gens = random_system(rng, n=n, p=p)
        gens = gens + field_equations(ring)
        ci = cliques_elim(gens, ctx_of(gens))
        if not ci.certified:
            continue
        combined = [g for part in ci.H for g in part]
        assert fp_zero_set(combined, p, n) == fp_zero_set(gens, p, n)


def test_recomposition_over_q(tree_system):
    _, gens = tree_system
    ci = cliques_elim(gens, ctx_of(gens))
    combined = [g for part in ci.H for g in part]
    gb = buchberger(combined)
    assert all(reduces_to_zero(f, gb) for f in gens)
