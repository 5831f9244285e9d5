"""Seeded random hamburger graphs for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .graph import Dag, GeneralizedHamburgerGraph, HamburgerGraph

WEIGHTS = tuple(Fraction(p, q) for p, q in ((1, 1), (2, 1), (1, 2), (-1, 1), (3, 2), (-2, 3), (5, 1)))


def _random_half(rng: random.Random, k: int, max_aux: int, edge_prob: float, weighted: bool,
                 increasing: bool) -> Dag:
    n_aux = rng.randint(0, max_aux)
    n = k + n_aux
    # a random topological order in which the distinguished vertices keep
    # their required relative order; any edge forward in it is allowed
    slots = sorted(rng.sample(range(n), k))
    labels = list(range(n))
    rng.shuffle(labels)
    dist_order = list(range(k)) if increasing else list(range(k - 1, -1, -1))
    order: list[int] = [-1] * n
    for slot, d in zip(slots, dist_order):
        order[slot] = labels[d]
    aux = iter(labels[k:])
    order = [o if o >= 0 else next(aux) for o in order]
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < edge_prob:
                w = rng.choice(WEIGHTS) if weighted else Fraction(1)
                edges.append((order[a], order[b], w))
    rng.shuffle(edges)
    return Dag(n, edges, labels[:k])


def random_hamburger(rng: random.Random, max_k: int = 4, max_aux: int = 6, edge_prob: float = 0.5,
                     weighted: bool = False) -> HamburgerGraph:
    """Random valid graph; weighted ones keep ``d1[i]·d2[i] = 1`` off the ends."""
    k = rng.randint(1, max_k)
    g1 = _random_half(rng, k, max_aux, edge_prob, weighted, increasing=True)
    g2 = _random_half(rng, k, max_aux, edge_prob, weighted, increasing=False)
    if not weighted:
        return HamburgerGraph(g1, g2)
    d1, d2 = [], []
    for i in range(k):
        a = rng.choice(WEIGHTS)
        d1.append(a)
        d2.append(1 / a if 0 < i < k - 1 else rng.choice(WEIGHTS))
    return HamburgerGraph(g1, g2, d1, d2)


def random_pairing(rng: random.Random, h: HamburgerGraph, even_only: bool = False) -> GeneralizedHamburgerGraph:
    """Keep the halves of ``h`` but connect ``w``'s back through a random permutation."""
    from .graph import permutation_sign

    k = h.k
    while True:
        perm = list(range(1, k + 1))
        rng.shuffle(perm)
        if not even_only or permutation_sign(perm) == 1:
            break
    return GeneralizedHamburgerGraph(h.g1, h.g2, tuple(range(1, k + 1)), tuple(perm), h.d1, h.d2)
