"""Undirected simple graphs: parsing, serialization, bipartition, degree queries.

Vertices are dense integers 0..n-1.  Edge indices are stable: edge i is
``edges[i]`` for the lifetime of the graph.  Planarity is never computed;
it is an asserted input flag validated only through the bipartite-planar
edge bound |E| <= 2n-4.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    DuplicateEdgeError,
    HeaderFormatError,
    NotBipartiteError,
    PlanarityNotAssertedError,
    SelfLoopError,
    TooSmallError,
    VertexRangeError,
)

X = "X"
Y = "Y"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with stable edge indices."""

    n: int
    edges: tuple  # tuple of (u, v) pairs
    planar_asserted: bool = False
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seen = set()
        adj = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError(f"self-loop at edge {i}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"vertex out of range at edge {i}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge at index {i}")
            seen.add(key)
            adj[u].append((v, i))
            adj[v].append((u, i))
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return [len(a) for a in self.adjacency]


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring into classes X and Y; side[v] is "X" or "Y"."""

    side: tuple

    def vertices_in(self, label):
        return [v for v, s in enumerate(self.side) if s == label]


class EdgeBoundStatus(enum.Enum):
    BELOW_BOUND = "BelowBound"
    EQUALITY_QUADRANGULATION_CANDIDATE = "EqualityQuadrangulationCandidate"
    EXCEEDS_BOUND = "ExceedsBound"


def parse_graph(text):
    """Parse the edge-list interchange format into a Graph.

    Format: first line "n m [planar]", then m lines "u v".  Rejects
    self-loops and duplicate edges with the offending line number.
    """
    lines = text.splitlines()
    if not lines:
        raise HeaderFormatError("empty document", 1)
    header = lines[0].split()
    planar = False
    if len(header) == 3 and header[2] == "planar":
        planar = True
        header = header[:2]
    if len(header) != 2:
        raise HeaderFormatError('expected "n m [planar]"', 1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise HeaderFormatError("n and m must be integers", 1) from None
    if n < 0 or m < 0:
        raise HeaderFormatError("n and m must be nonnegative", 1)

    edges = []
    seen = {}
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise HeaderFormatError('expected "u v"', lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise HeaderFormatError("vertex ids must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(
                f"duplicate of edge at line {seen[key]}", lineno
            )
        seen[key] = lineno
        edges.append((u, v))
    if len(edges) != m:
        raise HeaderFormatError(
            f"header promises {m} edges, found {len(edges)}", lineno + 1
        )
    return Graph(n=n, edges=tuple(edges), planar_asserted=planar)


def serialize_graph(g):
    """Inverse of parse_graph on (n, edge multiset, edge order)."""
    header = f"{g.n} {g.m} planar" if g.planar_asserted else f"{g.n} {g.m}"
    body = "".join(f"{u} {v}\n" for u, v in g.edges)
    return header + "\n" + body


def bipartition(g):
    """Two-color by BFS layering, per connected component.

    Each component's smallest vertex gets class X.  Raises
    NotBipartiteError with an explicit odd cycle otherwise.
    """
    side = [None] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = X
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in g.adjacency[u]:
                if side[v] is None:
                    side[v] = Y if side[u] == X else X
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    raise NotBipartiteError(_odd_cycle(parent, depth, u, v))
    return Bipartition(side=tuple(side))


def _odd_cycle(parent, depth, u, v):
    up, vp = u, v
    path_u, path_v = [u], [v]
    while depth[up] > depth[vp]:
        up = parent[up]
        path_u.append(up)
    while depth[vp] > depth[up]:
        vp = parent[vp]
        path_v.append(vp)
    while up != vp:
        up = parent[up]
        vp = parent[vp]
        path_u.append(up)
        path_v.append(vp)
    # path_u ends at the meeting vertex; close the cycle back to v.
    return path_u + path_v[-2::-1]


def min_degree(g):
    """delta(G); requires at least one vertex."""
    if g.n < 1:
        raise ValueError("graph has no vertices")
    return min(g.degrees())


def euler_quadrangulation_check(g):
    """Classify |E| against the bipartite-planar bound 2n-4.

    Equality marks a quadrangulation candidate; exceeding the bound means
    the planarity assertion is false.
    """
    if not g.planar_asserted:
        raise PlanarityNotAssertedError("planarity not asserted for this graph")
    if g.n < 4:
        raise TooSmallError(f"need n >= 4, got n = {g.n}")
    bipartition(g)  # raises NotBipartiteError when not two-colorable
    bound = 2 * g.n - 4
    if g.m < bound:
        return EdgeBoundStatus.BELOW_BOUND
    if g.m == bound:
        return EdgeBoundStatus.EQUALITY_QUADRANGULATION_CANDIDATE
    return EdgeBoundStatus.EXCEEDS_BOUND


def connected_components(g):
    """List of vertex lists, one per component, in discovery order."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps
