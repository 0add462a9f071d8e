"""Shared helpers: ring shortcuts, brute-force finite-field oracles and
random sparse systems."""

from __future__ import annotations

import random

import numpy as np
import pytest

from chordalelim.arith import QQ, PrimeField
from chordalelim.poly import Ring, parse_polynomial


def ring_q(*names):
    return Ring(tuple(names), QQ)


def ring_p(p, *names):
    return Ring(tuple(names), PrimeField(p))


def polys(ring, *texts):
    return [parse_polynomial(t, ring) for t in texts]


def poly(ring, text):
    return parse_polynomial(text, ring)


# ---------------------------------------------------------------------------
# brute-force evaluation oracle over GF(p)^n (independent of the core:
# touches only raw term data)

def fp_zero_set(gens, p, n):
    """All points of GF(p)^n killing every generator, as exponent tuples."""
    size = p ** n
    idx = np.arange(size, dtype=np.int64)
    coords = [(idx // p ** (n - 1 - v)) % p for v in range(n)]
    mask = np.ones(size, dtype=bool)
    for f in gens:
        acc = np.zeros(size, dtype=np.int64)
        for m, c in f.terms:
            t = np.full(size, int(c) % p, dtype=np.int64)
            for v, e in enumerate(m):
                if e:
                    table = np.array([pow(x, e, p) for x in range(p)],
                                     dtype=np.int64)
                    t = (t * table[coords[v]]) % p
            acc = (acc + t) % p
        mask &= acc == 0
        if not mask.any():
            break
    live = idx[mask]
    return {tuple(int((i // p ** (n - 1 - v)) % p) for v in range(n))
            for i in live}


def project(points, drop):
    """Drop the first ``drop`` coordinates of every point."""
    return {pt[drop:] for pt in points}


# ---------------------------------------------------------------------------
# random sparse systems over prime fields

def random_system(rng: random.Random, n, p, max_gens=8, max_deg=3,
                  max_support=3, max_terms=4):
    ring = Ring(tuple(f"x{i}" for i in range(n)), PrimeField(p))
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        sup = rng.sample(range(n), k=rng.randint(1, min(max_support, n)))
        d = {}
        for _ in range(rng.randint(1, max_terms)):
            m = [0] * n
            for _ in range(rng.randint(0, max_deg)):
                m[rng.choice(sup)] += 1
            c = rng.randrange(1, p) if p > 1 else 0
            key = tuple(m)
            d[key] = (d.get(key, 0) + c) % p
        f = ring.from_dict(d)
        if not f.is_zero():
            gens.append(f)
    if not gens:
        gens = [ring.var(0)]
    return ring, gens


# the 10-vertex graph reconstructed from its published clique structure;
# completing it along the identity order adds exactly the edges
# (5,7), (5,9), (7,9)
TEN_VERTEX_EDGES = [
    (0, 6), (0, 7), (1, 4), (1, 9), (2, 3), (2, 5), (3, 5), (3, 7), (3, 8),
    (4, 5), (4, 8), (4, 9), (5, 8), (6, 7), (6, 8), (6, 9), (7, 8), (8, 9),
]


@pytest.fixture
def rng():
    return random.Random(20260809)
