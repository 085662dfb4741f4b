"""Simple undirected graphs with the constructors the solver needs.

Vertices are labeled 0..n-1. A join ``L v K_s`` places the s new mutually
adjacent vertices at labels n..n+s-1 so certificates are reproducible.
Graphs are immutable and hashable; all operations return new graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def complement(self) -> "Graph":
        missing = frozenset(
            e for e in combinations(range(self.n), 2) if e not in self.edges
        )
        return Graph(self.n, missing)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps: list[list[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for y in sorted(self.adjacency[x]):
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def induced_edge_count(self, vertices: set[int]) -> int:
        return sum(1 for u, v in self.edges if u in vertices and v in vertices)

    def without_edges(self, drop: set[Edge]) -> "Graph":
        return Graph(self.n, self.edges - frozenset(drop))

    def is_clique(self, vertices: list[int]) -> bool:
        return all(self.has_edge(u, v) for u, v in combinations(vertices, 2))


def graph_from_edges(n: int, edges) -> Graph:
    return Graph(n, frozenset(_norm_edge(u, v) for u, v in edges))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph(n, frozenset(combinations(range(n), 2)))


def disjoint_cliques(sizes: list[int]) -> Graph:
    """Vertex-disjoint union of cliques, laid out in the order given."""
    edges: list[Edge] = []
    offset = 0
    for size in sizes:
        if size < 0:
            raise ValueError("clique sizes must be nonnegative")
        edges.extend(combinations(range(offset, offset + size), 2))
        offset += size
    return Graph(offset, frozenset(edges))


def join(base: Graph, s: int) -> Graph:
    """The join of ``base`` with K_s; new vertices get labels n..n+s-1."""
    if s < 0:
        raise ValueError("join size must be nonnegative")
    n = base.n
    edges = set(base.edges)
    edges.update((u, z) for z in range(n, n + s) for u in range(n))
    edges.update(combinations(range(n, n + s), 2))
    return Graph(n + s, frozenset(edges))


def join_edge_count(base: Graph, s: int) -> int:
    """|E(L v K_s)| without materializing the join."""
    return base.num_edges + base.n * s + s * (s - 1) // 2


@dataclass(frozen=True)
class JoinLayout:
    """A graph L together with a join size s, fixing the label convention."""

    base: Graph
    join_size: int

    def __post_init__(self) -> None:
        if self.join_size < 0:
            raise ValueError("join size must be nonnegative")

    @property
    def join_vertices(self) -> range:
        return range(self.base.n, self.base.n + self.join_size)

    def realize(self) -> Graph:
        return join(self.base, self.join_size)

    def edge_count(self) -> int:
        return join_edge_count(self.base, self.join_size)


# ---------------------------------------------------------------------------
# file formats: plain edge list and JSON, both written canonically


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}


def graph_from_json_dict(data: dict) -> Graph:
    return graph_from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty graph file")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)


def write_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(graph_to_json_dict(g), sort_keys=True) + "\n")
    else:
        path.write_text(format_edge_list(g))


def read_graph(path: str | Path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return graph_from_json_dict(json.loads(text))
    return parse_edge_list(text)
