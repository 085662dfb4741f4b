"""Deterministic integral max-flow (Dinic) for the star-orientation networks.

Arcs are explored in insertion order, so identical inputs always produce the
same flow and the same residual reachability, which keeps certificates
reproducible.
"""

from __future__ import annotations

from collections import deque


class MaxFlow:
    def __init__(self, num_nodes: int) -> None:
        self.n = num_nodes
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_edge(self, u: int, v: int, cap: int) -> int:
        """Add arc u->v with the given capacity; returns its arc id."""
        idx = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.to.append(u)
        self.cap.append(0)
        self.adj[u].append(idx)
        self.adj[v].append(idx + 1)
        return idx

    def flow_on(self, idx: int) -> int:
        return self.cap[idx ^ 1]

    def _bfs(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for idx in self.adj[x]:
                y = self.to[idx]
                if self.cap[idx] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    q.append(y)
        return level if level[t] >= 0 else None

    def _dfs(self, x: int, t: int, pushed: int, level: list[int], it: list[int]) -> int:
        if x == t:
            return pushed
        while it[x] < len(self.adj[x]):
            idx = self.adj[x][it[x]]
            y = self.to[idx]
            if self.cap[idx] > 0 and level[y] == level[x] + 1:
                got = self._dfs(y, t, min(pushed, self.cap[idx]), level, it)
                if got > 0:
                    self.cap[idx] -= got
                    self.cap[idx ^ 1] += got
                    return got
            it[x] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._bfs(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                pushed = self._dfs(s, t, 1 << 62, level, it)
                if pushed == 0:
                    break
                total += pushed

    def residual_reachable(self, s: int) -> list[bool]:
        """Nodes reachable from s in the residual graph (source side of a min cut)."""
        seen = [False] * self.n
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for idx in self.adj[x]:
                y = self.to[idx]
                if self.cap[idx] > 0 and not seen[y]:
                    seen[y] = True
                    stack.append(y)
        return seen
