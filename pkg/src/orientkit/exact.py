"""Exact proper-orientation-number search at desk scale, and the
quadrangulation dichotomy decision (value 3, except 2 for the 3-cube).

The search is complete backtracking over edge directions in a fixed order
(descending endpoint-degree sum, ties by edge index).  Pruning: a vertex's
indegree may never exceed k, and two adjacent fully decided vertices may
not tie.  The first witness in this order is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .density import pseudoarboricity
from .errors import ExceedsCapError, PreconditionFailedError
from .graphs import bipartition, connected_components, min_degree
from .orientation import Orientation


@dataclass(frozen=True)
class ExactResult:
    value: int  # the proper orientation number
    witness: Orientation


def exists_proper_k(g, k):
    """First proper k-orientation in the deterministic search order, or None."""
    if k < 0:
        return None
    m = g.m
    if m == 0:
        return Orientation(graph=g, direction=())
    deg = g.degrees()
    order = sorted(range(m), key=lambda i: (-(deg[g.edges[i][0]] + deg[g.edges[i][1]]), i))
    indeg = [0] * g.n
    undecided = deg[:]
    direction = [False] * m

    def conflicts(w):
        # w just became fully decided; ties with decided neighbors are final
        if indeg[w] > k:
            return True
        for z, _ in g.adjacency[w]:
            if undecided[z] == 0 and indeg[z] == indeg[w]:
                return True
        return False

    def search(pos):
        if pos == m:
            return True
        u, v = g.edges[order[pos]]
        for bit in (True, False):
            head = v if bit else u
            indeg[head] += 1
            undecided[u] -= 1
            undecided[v] -= 1
            ok = indeg[head] <= k
            if ok and undecided[u] == 0 and conflicts(u):
                ok = False
            if ok and undecided[v] == 0 and conflicts(v):
                ok = False
            if ok and search(pos + 1):
                direction[order[pos]] = bit
                return True
            indeg[head] -= 1
            undecided[u] += 1
            undecided[v] += 1
        return False

    if not search(0):
        return None
    return Orientation(graph=g, direction=tuple(direction))


def proper_orientation_number(g, k_max):
    """Least k <= k_max with a proper k-orientation, with its witness.

    Scans upward from the pseudoarboricity, a valid lower bound since any
    orientation of G has max indegree at least that.
    """
    start = max(1, pseudoarboricity(g))
    for k in range(start, k_max + 1):
        witness = exists_proper_k(g, k)
        if witness is not None:
            return ExactResult(value=k, witness=witness)
    raise ExceedsCapError(f"no proper k-orientation for k <= {k_max}")


def brute_force_proper_k(g, k):
    """Independent oracle: try all 2^|E| orientations.  |E| <= ~20 only."""
    m = g.m
    for mask in range(1 << m):
        indeg = [0] * g.n
        for i, (u, v) in enumerate(g.edges):
            indeg[v if mask >> i & 1 else u] += 1
        if max(indeg, default=0) > k:
            continue
        if all(indeg[u] != indeg[v] for u, v in g.edges):
            return Orientation(
                graph=g, direction=tuple(bool(mask >> i & 1) for i in range(m))
            )
    return None


Q3_EDGES = tuple(
    (a, b)
    for a in range(8)
    for b in range(a + 1, 8)
    if bin(a ^ b).count("1") == 1
)


def is_q3(g):
    """Isomorphism to the 3-cube by bipartition-respecting permutation search.

    Only attempted when n = 8 and G is 3-regular, so at most 2 * 4! * 4!
    candidate maps are checked.
    """
    if g.n != 8 or g.m != 12 or any(d != 3 for d in g.degrees()):
        return False
    from itertools import permutations

    from .errors import NotBipartiteError

    try:
        part = bipartition(g)
    except NotBipartiteError:
        return False
    ours_x = part.vertices_in("X")
    ours_y = part.vertices_in("Y")
    if len(ours_x) != 4:
        return False
    cube_even = [v for v in range(8) if bin(v).count("1") % 2 == 0]
    cube_odd = [v for v in range(8) if bin(v).count("1") % 2 == 1]
    target = {frozenset(e) for e in Q3_EDGES}
    for x_image, y_image in ((cube_even, cube_odd), (cube_odd, cube_even)):
        for perm_x in permutations(x_image):
            mapping = dict(zip(ours_x, perm_x))
            for perm_y in permutations(y_image):
                mapping.update(zip(ours_y, perm_y))
                if all(frozenset((mapping[u], mapping[v])) in target for u, v in g.edges):
                    return True
    return False


def quadrangulation_number(g):
    """Proper orientation number of a quadrangulation with min degree >= 3:
    2 when G is the 3-cube, 3 otherwise."""
    if len(connected_components(g)) != 1:
        raise PreconditionFailedError("connected")
    bipartition(g)
    if min_degree(g) < 3:
        raise PreconditionFailedError("min degree >= 3")
    if not g.planar_asserted:
        raise PreconditionFailedError("planarity asserted")
    if g.m != 2 * g.n - 4:
        raise PreconditionFailedError("|E| = 2n-4 (quadrangulation)")
    return 2 if is_q3(g) else 3
