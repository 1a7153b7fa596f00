"""Dinic max flow on integer capacities.

Capacities are exact Python ints (scaled rationals upstream); no floats
anywhere, so feasibility answers are never off by epsilon.
"""

from __future__ import annotations

from collections import deque


class Dinic:
    def __init__(self, num_nodes):
        self.n = num_nodes
        self.head = [[] for _ in range(num_nodes)]  # node -> arc ids
        self.to = []
        self.cap = []

    def add_edge(self, u, v, cap):
        """Add arc u->v with the given capacity; returns its arc id."""
        arc = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.head[u].append(arc)
        self.to.append(u)
        self.cap.append(0)
        self.head[v].append(arc + 1)
        return arc

    def flow_on(self, arc):
        """Flow pushed through arc = capacity now sitting on its reverse."""
        return self.cap[arc ^ 1]

    def _bfs(self, s, t):
        self.level = [-1] * self.n
        self.level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self.head[u]:
                v = self.to[arc]
                if self.cap[arc] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    queue.append(v)
        return self.level[t] >= 0

    def _dfs(self, u, t, pushed):
        if u == t:
            return pushed
        while self.iter[u] < len(self.head[u]):
            arc = self.head[u][self.iter[u]]
            v = self.to[arc]
            if self.cap[arc] > 0 and self.level[v] == self.level[u] + 1:
                got = self._dfs(v, t, min(pushed, self.cap[arc]))
                if got > 0:
                    self.cap[arc] -= got
                    self.cap[arc ^ 1] += got
                    return got
            self.iter[u] += 1
        return 0

    def max_flow(self, s, t):
        total = 0
        while self._bfs(s, t):
            self.iter = [0] * self.n
            while True:
                pushed = self._dfs(s, t, float("inf"))
                if pushed == 0:
                    break
                total += pushed
        return total

    def min_cut_source_side(self, s):
        """Nodes reachable from s in the residual network (call after max_flow)."""
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for arc in self.head[u]:
                v = self.to[arc]
                if self.cap[arc] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return {v for v in range(self.n) if seen[v]}
