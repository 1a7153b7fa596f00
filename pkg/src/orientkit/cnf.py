"""DIMACS CNF export of "G has a proper k-orientation", plus a small DPLL
solver used as an in-process satisfiability cross-check.

One boolean per edge gives the direction (true = arc from the first listed
endpoint into the second).  Each vertex gets a two-sided sequential counter
over its incoming literals; register bit r(v,j) holds iff indegree(v) >= j.
Indegrees above k are forbidden, and for every edge uv and every t in 0..k
a clause rules out indegree(u) = indegree(v) = t, with the constant bits
r(.,0) = true and r(.,k+1) = false folded away.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IncompleteModelError
from .orientation import Orientation


@dataclass
class CnfDocument:
    num_vars: int
    clauses: list
    comments: list = field(default_factory=list)

    def to_dimacs(self):
        lines = [f"c {c}" for c in self.comments]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"


def export_cnf(g, k):
    """CNF satisfiable iff g admits a proper k-orientation.

    Direction variables are 1..m in edge-index order; a comment line
    "edge i : u v" documents each, so models decode back to orientations.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = g.m
    comments = [f"proper {k}-orientation of graph with n={g.n} m={m}"]
    for i, (u, v) in enumerate(g.edges):
        comments.append(f"edge {i} : {u} {v}")

    clauses = []
    next_var = m + 1

    def fresh():
        nonlocal next_var
        next_var += 1
        return next_var - 1

    # incoming[v] = literals true exactly when the corresponding arc enters v
    incoming = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incoming[v].append(i + 1)
        incoming[u].append(-(i + 1))

    registers = []  # registers[v][j-1] = var for "indegree(v) >= j", j <= min(deg, k)
    for v in range(g.n):
        lits = incoming[v]
        deg = len(lits)
        width = min(deg, k)
        # s[i][j] for partial sums over the first i literals, 1 <= j <= min(i, width)
        prev = []
        for i, lit in enumerate(lits, start=1):
            cur = [fresh() for _ in range(min(i, width))]
            for j in range(1, len(cur) + 1):
                s_ij = cur[j - 1]
                s_prev_j = prev[j - 1] if j <= len(prev) else None  # None = false
                s_prev_j1 = prev[j - 2] if j >= 2 else True  # True = constant true
                # s_prev_j -> s_ij
                if s_prev_j is not None:
                    clauses.append([-s_prev_j, s_ij])
                # lit & s_prev_{j-1} -> s_ij
                if s_prev_j1 is True:
                    clauses.append([-lit, s_ij])
                else:
                    clauses.append([-lit, -s_prev_j1, s_ij])
                # s_ij -> s_prev_j | lit
                if s_prev_j is None:
                    clauses.append([-s_ij, lit])
                else:
                    clauses.append([-s_ij, s_prev_j, lit])
                # s_ij -> s_prev_j | s_prev_{j-1}
                if s_prev_j1 is not True:
                    if s_prev_j is None:
                        clauses.append([-s_ij, s_prev_j1])
                    else:
                        clauses.append([-s_ij, s_prev_j, s_prev_j1])
            # forbid reaching k+1: not(lit & s_prev_k)
            if len(prev) >= k:
                clauses.append([-lit, -prev[k - 1]])
            prev = cur
        registers.append(prev)

    # properness: for each edge uv and t in 0..k, not both indegrees equal t
    for u, v in g.edges:
        for t in range(k + 1):
            clause = []
            satisfied = False
            for w in (u, v):
                reg = registers[w]
                if t >= 1:
                    if t > len(reg):
                        satisfied = True  # r(w,t) is constant false
                        break
                    clause.append(-reg[t - 1])
                if t + 1 <= k and t + 1 <= len(reg):
                    clause.append(reg[t])
            if not satisfied:
                clauses.append(clause)

    return CnfDocument(num_vars=next_var - 1, clauses=clauses, comments=comments)


def decode_model(g, k, assignment):
    """Orientation read off the direction variables of a satisfying model.

    assignment is a DIMACS-style literal list; every direction variable
    1..m must appear.  Callers re-verify with verify_orientation.
    """
    values = {}
    for lit in assignment:
        if lit == 0:
            continue
        values[abs(lit)] = lit > 0
    direction = []
    for i in range(g.m):
        if i + 1 not in values:
            raise IncompleteModelError(f"direction variable {i + 1} unassigned")
        direction.append(values[i + 1])
    return Orientation(graph=g, direction=tuple(direction))


def dpll(clauses, num_vars):
    """Complete DPLL with unit propagation; returns a model literal list or None.

    Meant for the small cross-check instances, not as a production solver.
    """
    assign = {}

    def propagate(trail):
        while True:
            changed = False
            for clause in clauses:
                unassigned = None
                satisfied = False
                count = 0
                for lit in clause:
                    val = assign.get(abs(lit))
                    if val is None:
                        unassigned = lit
                        count += 1
                    elif val == (lit > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if count == 0:
                    return False
                if count == 1:
                    var = abs(unassigned)
                    assign[var] = unassigned > 0
                    trail.append(var)
                    changed = True
            if not changed:
                return True

    def solve():
        trail = []
        if not propagate(trail):
            for var in trail:
                del assign[var]
            return False
        var = next((v for v in range(1, num_vars + 1) if v not in assign), None)
        if var is None:
            return True
        for value in (True, False):
            assign[var] = value
            if solve():
                return True
            del assign[var]
        for var in trail:
            del assign[var]
        return False

    if not solve():
        return None
    return [v if assign.get(v, False) else -v for v in range(1, num_vars + 1)]
