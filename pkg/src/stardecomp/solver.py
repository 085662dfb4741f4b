"""Decide and construct k-star decompositions with prescribed center counts.

A k-precentral function assigns each vertex the number of stars to be
centered there, subject to k * sum(gamma) = |E|. Such a decomposition exists
iff the edges can be oriented so that exactly k*gamma(x) edges leave each x,
which is an integral flow feasibility question: source -> vertex x with
capacity k*gamma(x), vertex -> incident edge node with capacity 1, edge node
-> sink with capacity 1. Flow value |E| yields the orientation and hence the
stars; anything less yields a vertex set T whose incident-edge count falls
short of k * sum(gamma over T), certifying infeasibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from .flow import MaxFlow
from .graphs import Graph, complete_graph


@dataclass(frozen=True)
class Star:
    center: int
    leaves: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(min(self.center, x), max(self.center, x)) for x in self.leaves]


@dataclass(frozen=True)
class StarDecomposition:
    k: int
    stars: tuple[Star, ...]

    def central_function(self, n: int) -> tuple[int, ...]:
        gamma = [0] * n
        for star in self.stars:
            gamma[star.center] += 1
        return tuple(gamma)

    def covered_edges(self) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        for star in self.stars:
            out.extend(star.edges())
        return out

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "stars": [
                {"center": s.center, "leaves": list(s.leaves)} for s in self.stars
            ],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "StarDecomposition":
        return StarDecomposition(
            int(data["k"]),
            tuple(
                Star(int(s["center"]), tuple(int(x) for x in s["leaves"]))
                for s in data["stars"]
            ),
        )


@dataclass(frozen=True)
class DeficiencyWitness:
    """A vertex set T with fewer incident edges than k * sum(gamma over T)."""

    vertices: tuple[int, ...]
    delta_plus: int
    delta_minus: int

    @property
    def delta(self) -> int:
        return self.delta_plus - self.delta_minus

    def to_json_dict(self) -> dict:
        return {
            "T": list(self.vertices),
            "delta_plus": self.delta_plus,
            "delta_minus": self.delta_minus,
            "delta": self.delta,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "DeficiencyWitness":
        w = DeficiencyWitness(
            tuple(int(x) for x in data["T"]),
            int(data["delta_plus"]),
            int(data["delta_minus"]),
        )
        if w.delta != int(data["delta"]):
            raise ValueError("inconsistent deficiency record")
        return w


def _check_gamma(g: Graph, k: int, gamma) -> tuple[int, ...]:
    if k < 2:
        raise ValueError("star size k must be at least 2")
    gamma = tuple(int(x) for x in gamma)
    if len(gamma) != g.n:
        raise ValueError(f"gamma has {len(gamma)} entries for {g.n} vertices")
    if any(x < 0 for x in gamma):
        raise ValueError("gamma values must be nonnegative")
    return gamma


def is_precentral(g: Graph, k: int, gamma) -> bool:
    gamma = _check_gamma(g, k, gamma)
    return k * sum(gamma) == g.num_edges


def deficiency(g: Graph, k: int, gamma, vertices) -> DeficiencyWitness:
    """Exact deficiency of a vertex set: incident edges minus k*sum(gamma)."""
    gamma = _check_gamma(g, k, gamma)
    tset = set(vertices)
    if any(not (0 <= x < g.n) for x in tset):
        raise ValueError("witness vertices out of range")
    plus = sum(1 for u, v in g.edges if u in tset or v in tset)
    minus = k * sum(gamma[x] for x in tset)
    return DeficiencyWitness(tuple(sorted(tset)), plus, minus)


def shrink_witness(g: Graph, k: int, gamma, vertices) -> tuple[int, ...]:
    """Greedily drop vertices (descending label) that do not increase the deficiency.

    Every vertex with gamma = 0 is always dropped, so the result lives inside
    the support of gamma. The deficiency never increases.
    """
    gamma = _check_gamma(g, k, gamma)
    current = set(vertices)
    delta = deficiency(g, k, gamma, current).delta
    if delta >= 0:
        raise ValueError("shrink_witness expects a set with negative deficiency")
    for x in sorted(current, reverse=True):
        trial = current - {x}
        d = deficiency(g, k, gamma, trial).delta
        if d <= delta:
            current = trial
            delta = d
    return tuple(sorted(current))


def decide_star_decomposition(
    g: Graph, k: int, gamma
) -> StarDecomposition | DeficiencyWitness:
    """Either a decomposition with center counts exactly gamma, or a witness set.

    The witness is shrunk so all of its vertices carry positive gamma and its
    deficiency is negative.
    """
    gamma = _check_gamma(g, k, gamma)
    m = g.num_edges
    if k * sum(gamma) != m:
        raise ValueError("gamma is not k-precentral for this graph")

    edges = g.sorted_edges
    source = 0
    vnode = 1
    enode = 1 + g.n
    sink = 1 + g.n + m
    net = MaxFlow(sink + 1)
    for x in range(g.n):
        net.add_edge(source, vnode + x, k * gamma[x])
    arc_of: list[tuple[int, int]] = []
    for i, (u, v) in enumerate(edges):
        a = net.add_edge(vnode + u, enode + i, 1)
        b = net.add_edge(vnode + v, enode + i, 1)
        net.add_edge(enode + i, sink, 1)
        arc_of.append((a, b))

    value = net.max_flow(source, sink)
    if value == m:
        out_leaves: list[list[int]] = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(edges):
            if net.flow_on(arc_of[i][0]) == 1:
                out_leaves[u].append(v)
            else:
                out_leaves[v].append(u)
        stars: list[Star] = []
        for x in range(g.n):
            leaves = sorted(out_leaves[x])
            if len(leaves) != k * gamma[x]:
                raise RuntimeError("orientation out-degree mismatch")
            for j in range(gamma[x]):
                stars.append(Star(x, tuple(leaves[j * k : (j + 1) * k])))
        return StarDecomposition(k, tuple(stars))

    reach = net.residual_reachable(source)
    raw = [x for x in range(g.n) if reach[vnode + x]]
    witness = deficiency(g, k, gamma, raw)
    if witness.delta >= 0:
        raise RuntimeError("min cut did not produce a deficient set")
    shrunk = shrink_witness(g, k, gamma, raw)
    return deficiency(g, k, gamma, shrunk)


def validate_decomposition(
    g: Graph, d: StarDecomposition, require_full: bool = True
) -> str | None:
    """None if the decomposition is valid for g, else a description of the
    first violation found. Never raises."""
    if d.k < 2:
        return f"star size {d.k} is below 2"
    seen: set[tuple[int, int]] = set()
    for idx, star in enumerate(d.stars):
        if len(star.leaves) != d.k:
            return f"star {idx} at {star.center} has {len(star.leaves)} leaves, wanted {d.k}"
        if len(set(star.leaves)) != d.k:
            return f"star {idx} at {star.center} repeats a leaf"
        if star.center in star.leaves:
            return f"star {idx} has its center {star.center} as a leaf"
        for edge in star.edges():
            u, v = edge
            if not (0 <= u < v < g.n):
                return f"star {idx} uses out-of-range edge {edge}"
            if edge not in g.edges:
                return f"star {idx} uses edge {edge} that is not in the graph"
            if edge in seen:
                return f"edge {edge} covered twice"
            seen.add(edge)
    if require_full and len(seen) != g.num_edges:
        missing = sorted(g.edges - seen)[0]
        return f"edge {missing} uncovered"
    return None


def balanced_gamma(g: Graph, k: int) -> tuple[int, ...]:
    """Spread |E|/k centers as evenly as possible over vertices 0..n-1."""
    if g.num_edges % k:
        raise ValueError("edge count not divisible by k")
    b = g.num_edges // k
    if g.n == 0:
        return ()
    base, extra = divmod(b, g.n)
    return tuple(base + 1 if x < extra else base for x in range(g.n))


class RepairLimitReached(RuntimeError):
    """The gamma-repair loop gave up without reaching a decomposition."""


def decompose_with_repair(
    g: Graph, k: int, gamma=None, max_repairs: int | None = None
) -> StarDecomposition:
    """Decompose with a balanced gamma, repairing it via witness feedback.

    Each failed attempt moves one unit of gamma from the lowest-labeled
    witness vertex to the lowest-labeled outside vertex with degree slack.
    Aborts after n^2 repairs; the callers use this only where a suitable
    gamma is known to exist.
    """
    gamma = list(balanced_gamma(g, k)) if gamma is None else list(_check_gamma(g, k, gamma))
    if max_repairs is None:
        max_repairs = g.n * g.n
    for _ in range(max_repairs + 1):
        result = decide_star_decomposition(g, k, gamma)
        if isinstance(result, StarDecomposition):
            return result
        donors = [x for x in result.vertices if gamma[x] >= 1]
        outside = set(result.vertices)
        takers = [
            y
            for y in range(g.n)
            if y not in outside and k * (gamma[y] + 1) <= g.degree(y)
        ]
        if not donors or not takers:
            raise RepairLimitReached("no repair move available")
        gamma[donors[0]] -= 1
        gamma[takers[0]] += 1
    raise RepairLimitReached(f"gave up after {max_repairs} repairs")


def decompose_complete(n: int, k: int) -> StarDecomposition | None:
    """A k-star decomposition of K_n, or None when none exists.

    For n >= 2 one exists iff n >= 2k and C(n,2) is divisible by k; K_1 is
    decomposed by the empty set of stars.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if k < 2:
        raise ValueError("star size k must be at least 2")
    if n == 1:
        return StarDecomposition(k, ())
    pairs = n * (n - 1) // 2
    if n < 2 * k or pairs % k != 0:
        return None
    return decompose_with_repair(complete_graph(n), k)


def two_star_decompose(g: Graph) -> StarDecomposition | None:
    """A 2-star decomposition, or None when some component has odd edge count.

    Per component the edges are paired bottom-up along a BFS tree: each
    vertex pairs its still-unused non-parent edges, attaching a leftover to
    the parent edge.
    """
    stars: list[Star] = []
    used: set[tuple[int, int]] = set()
    for comp in g.components():
        comp_edges = g.induced_edge_count(set(comp))
        if comp_edges % 2:
            return None
        if comp_edges == 0:
            continue
        root = comp[0]
        parent: dict[int, int | None] = {root: None}
        order = [root]
        queue = [root]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y in sorted(g.neighbors(x)):
                if y not in parent:
                    parent[y] = x
                    order.append(y)
                    queue.append(y)
        for v in reversed(order):
            p = parent[v]
            avail = [
                w
                for w in sorted(g.neighbors(v))
                if w != p and (min(v, w), max(v, w)) not in used
            ]
            for i in range(0, len(avail) - 1, 2):
                a, b = avail[i], avail[i + 1]
                stars.append(Star(v, (min(a, b), max(a, b))))
                used.add((min(v, a), max(v, a)))
                used.add((min(v, b), max(v, b)))
            if len(avail) % 2 == 1:
                if p is None:
                    raise RuntimeError("odd leftover at component root")
                a = avail[-1]
                stars.append(Star(v, (min(a, p), max(a, p))))
                used.add((min(v, a), max(v, a)))
                used.add((min(v, p), max(v, p)))
    return StarDecomposition(2, tuple(stars))


_DOT_PALETTE = (
    "red", "blue", "darkgreen", "orange", "purple", "brown",
    "deeppink", "cadetblue", "goldenrod", "black",
)


def decomposition_to_dot(g: Graph, d: StarDecomposition) -> str:
    """Graphviz rendering with one color per star; uncovered edges stay gray."""
    covered: dict[tuple[int, int], int] = {}
    for idx, star in enumerate(d.stars):
        for edge in star.edges():
            covered[edge] = idx
    lines = ["graph stars {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.sorted_edges:
        idx = covered.get((u, v))
        if idx is None:
            lines.append(f'  {u} -- {v} [color="gray"];')
        else:
            color = _DOT_PALETTE[idx % len(_DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{color}", label="{idx}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
