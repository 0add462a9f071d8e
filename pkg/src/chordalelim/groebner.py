"""Buchberger engine: reduced bases, elimination by order restriction,
zero-dimensionality, standard monomials and ideal intersection.

Pair selection uses the normal strategy (smallest lcm under the working
order) and the pair set is pruned with the Gebauer-Moeller criteria.  Output
bases are always inter-reduced and monic, sorted descending by leading
monomial, so equal ideals produce identical bases.
"""

from __future__ import annotations

from .poly import (LEX, Polynomial, Ring, dedupe, mono_divides,
                   mono_lcm, mono_mul, normal_form, s_polynomial)


def _update(G, lms, P, f, order):
    """Add f to the basis, pruning new and old pairs (Gebauer-Moeller)."""
    lmf = f.leading_monomial(order)
    t = len(G)
    kept = set()
    for (i, j) in P:
        lcm_ij = mono_lcm(lms[i], lms[j])
        if (not mono_divides(lmf, lcm_ij)
                or lcm_ij == mono_lcm(lms[i], lmf)
                or lcm_ij == mono_lcm(lms[j], lmf)):
            kept.add((i, j))
    by_lcm = {}
    for i in range(t):
        by_lcm.setdefault(mono_lcm(lms[i], lmf), []).append(i)
    minimal = []
    for lcm in sorted(by_lcm, key=order.key):
        if all(not mono_divides(m, lcm) for m in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        # skip pairs with coprime leading monomials (their S-poly reduces to 0)
        if not any(mono_lcm(lms[i], lmf) == mono_mul(lms[i], lmf)
                   for i in by_lcm[lcm]):
            kept.add((min(by_lcm[lcm]), t))
    G.append(f)
    lms.append(lmf)
    return kept


def _minimalize(G, order):
    out = []
    for f in sorted(G, key=lambda g: order.key(g.leading_monomial(order))):
        lmf = f.leading_monomial(order)
        if all(not mono_divides(g.leading_monomial(order), lmf) for g in out):
            out.append(f)
    return out


def _interreduce(G, order):
    out = []
    for i, g in enumerate(G):
        r = normal_form(g, G[:i] + G[i + 1:], order)
        if not r.is_zero():
            out.append(r.monic(order))
    return out


def buchberger(F, order=LEX):
    """Reduced monic Groebner basis of the ideal generated by F."""
    F = dedupe(F)
    if not F:
        return []
    G: list[Polynomial] = []
    lms: list = []
    P: set = set()
    for f in F:
        P = _update(G, lms, P, f.monic(order), order)
    while P:
        i, j = min(P, key=lambda p: order.key(mono_lcm(lms[p[0]], lms[p[1]])))
        P.remove((i, j))
        s = s_polynomial(G[i], G[j], order)
        r = normal_form(s, G, order)
        if not r.is_zero():
            P = _update(G, lms, P, r.monic(order), order)
    G = _interreduce(_minimalize(G, order), order)
    G.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return G


def is_groebner_basis(G, order=LEX) -> bool:
    """True iff every S-polynomial of a pair of G reduces to zero modulo G."""
    G = dedupe(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            lmi = G[i].leading_monomial(order)
            lmj = G[j].leading_monomial(order)
            if mono_lcm(lmi, lmj) == mono_mul(lmi, lmj):
                continue
            if not normal_form(s_polynomial(G[i], G[j], order), G, order).is_zero():
                return False
    return True


def reduces_to_zero(f, G, order=LEX) -> bool:
    return normal_form(f, G, order).is_zero()


def same_ideal(A, B, order=LEX) -> bool:
    """True iff A and B generate the same ideal (via mutual reduction)."""
    gb_a = buchberger(A, order)
    gb_b = buchberger(B, order)
    return gb_a == gb_b


def elimination_ideal(F, level: int):
    """Generators of the exact level-th elimination ideal.

    Computes a lex Groebner basis and keeps the elements free of the
    variables x_0 ... x_{level-1}; those form a Groebner basis of the
    intersection with the smaller ring.
    """
    gb = buchberger(F, LEX)
    return [g for g in gb if all(v >= level for v in g.support())]


def is_trivial_ideal(F) -> bool:
    """True iff the ideal is the whole ring (its basis contains a constant)."""
    gb = buchberger(F, LEX)
    return any(g.is_constant() and not g.is_zero() for g in gb)


def _pure_power_degrees(gb, variables, order=LEX):
    """Minimal d with x_v^d a leading monomial, per variable; None if absent."""
    degs = {v: None for v in variables}
    for g in gb:
        lm = g.leading_monomial(order)
        sup = [i for i, e in enumerate(lm) if e]
        if not sup:
            for v in degs:
                degs[v] = 0
        elif len(sup) == 1 and sup[0] in degs:
            v = sup[0]
            d = lm[v]
            if degs[v] is None or d < degs[v]:
                degs[v] = d
    return degs


def min_pure_power_degree(F, v: int):
    """Smallest d with x_v^d in the initial ideal of the lex basis of F."""
    gb = buchberger(F, LEX)
    return _pure_power_degrees(gb, [v])[v]


def is_zero_dimensional(F, variables=None) -> bool:
    """True iff the initial ideal contains a pure power of every variable
    (by default, every ring variable)."""
    F = dedupe(F)
    if not F:
        return False
    ring = F[0].ring
    if variables is None:
        variables = range(ring.nvars)
    gb = buchberger(F, LEX)
    degs = _pure_power_degrees(gb, variables)
    return all(d is not None for d in degs.values())


def standard_monomial_count(F, variables=None) -> int:
    """Number of monomials in the given variables outside the initial ideal.

    Equals the K-dimension of the quotient ring, and the number of points of
    the variety when the ideal is radical and zero dimensional.
    """
    F = dedupe(F)
    if not F:
        raise ValueError("zero ideal is not zero dimensional")
    ring = F[0].ring
    if variables is None:
        variables = list(range(ring.nvars))
    else:
        variables = list(variables)
    gb = buchberger(F, LEX)
    if any(g.is_constant() for g in gb):
        return 0
    degs = _pure_power_degrees(gb, variables)
    if any(d is None for d in degs.values()):
        raise ValueError("ideal is not zero dimensional on the given variables")
    varset = set(variables)
    lms = [g.leading_monomial(LEX) for g in gb]
    lms = [m for m in lms
           if all(i in varset for i, e in enumerate(m) if e)]

    def rec(idx, live):
        # invariant: every m in live satisfies m[u] <= chosen exponent for
        # all u among variables[:idx]; if one has nothing left to demand,
        # it divides every extension of the current choice.
        if any(all(m[u] == 0 for u in variables[idx:]) for m in live):
            return 0
        if idx == len(variables):
            return 1
        v = variables[idx]
        total = 0
        for e in range(degs[v]):
            total += rec(idx + 1, [m for m in live if m[v] <= e])
        return total

    return rec(0, lms)


def ideal_intersection(A, B):
    """Generators of the intersection of two ideals in the same ring.

    Standard construction: eliminate a fresh variable t, placed above every
    ring variable, from t*A + (1-t)*B.
    """
    A = dedupe(A)
    B = dedupe(B)
    if not A or not B:
        return []
    ring = A[0].ring
    if B[0].ring != ring:
        raise ValueError("intersection of ideals from different rings")
    aux_name = "_t"
    while aux_name in ring.names:
        aux_name += "_"
    big = Ring((aux_name,) + ring.names, ring.field)

    def lift(f, shift_terms):
        terms = {}
        for m, c in f.terms:
            terms[(shift_terms,) + m] = c
        return big.from_dict(terms)

    t_gens = [lift(f, 1) for f in A]
    one_minus_t = big.from_dict({(0,) * big.nvars: ring.field.one,
                                 (1,) + ring.zero_mono(): ring.field.element(-1)})
    u_gens = [lift(f, 0) * one_minus_t for f in B]
    gb = buchberger(t_gens + u_gens, LEX)
    out = []
    for g in gb:
        if 0 in g.support():
            continue
        out.append(ring.from_dict({m[1:]: c for m, c in g.terms}))
    return out
