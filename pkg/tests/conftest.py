"""Shared oracles and instance builders for the test suite.

The oracles here are deliberately independent of the library's algorithms:
Mad by subset enumeration, properness by trying all 2^|E| orientations.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from orientkit.graphs import Graph


def brute_force_mad(g):
    """Max of 2|E(H)|/|V(H)| over all nonempty vertex subsets."""
    best = Fraction(0)
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            vs = set(subset)
            inside = sum(1 for u, v in g.edges if u in vs and v in vs)
            best = max(best, Fraction(2 * inside, size))
    return best


def brute_force_exists_proper_k(g, k):
    """Scan all 2^|E| orientations for a proper one with max indegree <= k."""
    m = g.m
    for mask in range(1 << m):
        indeg = [0] * g.n
        for i, (u, v) in enumerate(g.edges):
            indeg[v if mask >> i & 1 else u] += 1
        if max(indeg, default=0) <= k and all(
            indeg[u] != indeg[v] for u, v in g.edges
        ):
            return True
    return False


def random_connected_graph(rng, n):
    """Random connected simple graph: spanning tree plus random extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    extra = rng.randrange(0, n)
    candidates = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra])
    return Graph(n=n, edges=tuple(sorted(edges)))


def random_bipartite_graph(rng, nx, ny, degree_x):
    """Bipartite graph where each X vertex picks degree_x distinct neighbors.

    X vertices are 0..nx-1, Y vertices nx..nx+ny-1.
    """
    edges = []
    for x in range(nx):
        for y in rng.sample(range(nx, nx + ny), degree_x):
            edges.append((x, y))
    return Graph(n=nx + ny, edges=tuple(edges))
