"""Deterministic constructors for the named instance families.

Vertex-id layouts are fixed and documented per family so orientations and
certificates are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParamsError
from .graphs import Graph

FAMILIES = ("q3", "pdw", "theorem4", "complete_bipartite", "path", "cycle", "star")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()


def q3():
    """The 3-cube: vertices 0..7 are binary triples, edges flip one bit."""
    edges = tuple(
        (a, b)
        for a in range(8)
        for b in range(a + 1, 8)
        if bin(a ^ b).count("1") == 1
    )
    return Graph(n=8, edges=edges, planar_asserted=True)


def pdw(m):
    """Pseudo-double wheel: cycle v0..v(2m-1), apex 2m on even vertices,
    apex 2m+1 on odd ones.  A quadrangulation with min degree 3 for m >= 3."""
    if m < 3:
        raise BadParamsError("pdw needs m >= 3")
    cycle_len = 2 * m
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    edges += [(cycle_len, i) for i in range(0, cycle_len, 2)]
    edges += [(cycle_len + 1, i) for i in range(1, cycle_len, 2)]
    return Graph(n=cycle_len + 2, edges=tuple(edges), planar_asserted=True)


def theorem4_id_table(extra=0):
    """Role -> (first id, last id) for the tight delta=2 instance.

    Layout: a[i][j][k] with i,j in 0..3 and k in 0..6 at id 28i+7j+k... the
    exact rule is a_id(i,j,k) = (4i+j)*7 + k; then the b, c, d, p, q hubs,
    the two top vertices, and the optional extra degree-2 vertices hanging
    off b[0][0] and c[0][0].
    """
    if extra < 0:
        raise BadParamsError("extra must be >= 0")
    table = {
        "a": (0, 111),
        "b": (112, 127),
        "c": (128, 143),
        "d": (144, 171),
        "p": (172, 175),
        "q": (176, 179),
        "s": (180, 180),
        "t": (181, 181),
    }
    if extra:
        table["extra"] = (182, 181 + extra)
    return table


def _t4_ids():
    a = lambda i, j, k: (4 * i + j) * 7 + k
    b = lambda i, j: 112 + 4 * i + j
    c = lambda i, j: 128 + 4 * i + j
    d = lambda i, k: 144 + 7 * i + k
    p = lambda i: 172 + i
    q = lambda i: 176 + i
    return a, b, c, d, p, q, 180, 181


def theorem4(extra=0):
    """The tight quadrangulation with min degree 2 and orientation number 4.

    Four edge groups: a-hub spokes, hub-to-p/q, d-to-p/q, and p/q-to-s/t;
    extra >= 1 appends degree-2 vertices adjacent to b[0][0] and c[0][0]
    (the infinite-family variant).  n = 182+extra, |E| = 360+2*extra = 2n-4.
    """
    if extra < 0:
        raise BadParamsError("extra must be >= 0")
    a, b, c, d, p, q, s, t = _t4_ids()
    edges = []
    for i in range(4):
        for j in range(4):
            for k in range(7):
                edges.append((a(i, j, k), b(i, j)))
                edges.append((a(i, j, k), c(i, j)))
    for i in range(4):
        for j in range(4):
            edges.append((b(i, j), p(i)))
            edges.append((b(i, j), q(i)))
            edges.append((c(i, j), p(i)))
            edges.append((c(i, j), q(i)))
    for i in range(4):
        for k in range(7):
            edges.append((d(i, k), p(i)))
            edges.append((d(i, k), q(i)))
    for i in range(4):
        edges.append((p(i), s))
        edges.append((p(i), t))
        edges.append((q(i), s))
        edges.append((q(i), t))
    for x in range(182, 182 + extra):
        edges.append((x, b(0, 0)))
        edges.append((x, c(0, 0)))
    return Graph(n=182 + extra, edges=tuple(edges), planar_asserted=True)


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise BadParamsError("complete_bipartite needs a, b >= 1")
    edges = tuple((i, a + j) for i in range(a) for j in range(b))
    return Graph(n=a + b, edges=edges, planar_asserted=min(a, b) <= 2)


def path(n):
    if n < 1:
        raise BadParamsError("path needs n >= 1")
    return Graph(n=n, edges=tuple((i, i + 1) for i in range(n - 1)), planar_asserted=True)


def cycle(n):
    if n < 3:
        raise BadParamsError("cycle needs n >= 3")
    return Graph(
        n=n, edges=tuple((i, (i + 1) % n) for i in range(n)), planar_asserted=True
    )


def star(leaves):
    """K_{1,leaves} with the center at vertex 0."""
    if leaves < 1:
        raise BadParamsError("star needs at least one leaf")
    return Graph(
        n=leaves + 1,
        edges=tuple((0, i) for i in range(1, leaves + 1)),
        planar_asserted=True,
    )


def generate(spec):
    """Dispatch a FamilySpec to its constructor."""
    family, params = spec.family, tuple(spec.params)
    arity = {
        "q3": 0,
        "pdw": 1,
        "theorem4": 1,
        "complete_bipartite": 2,
        "path": 1,
        "cycle": 1,
        "star": 1,
    }
    if family not in arity:
        raise BadParamsError(f"unknown family {family!r}")
    if len(params) != arity[family]:
        raise BadParamsError(
            f"{family} takes {arity[family]} parameter(s), got {len(params)}"
        )
    builders = {
        "q3": q3,
        "pdw": pdw,
        "theorem4": theorem4,
        "complete_bipartite": complete_bipartite,
        "path": path,
        "cycle": cycle,
        "star": star,
    }
    return builders[family](*params)
