"""Brute-force ground truth for the flow-based solver.

Everything in here works by definition-level search: backtracking over edge
assignments, full subset enumeration for deficiencies, and enumeration of
candidate center-count functions. The only pruning allowed is counting
arguments that follow directly from what a star is, so these searches remain
an independent check on the flow formulation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, complete_graph
from .solver import Star, StarDecomposition, decide_star_decomposition

DEFAULT_SEARCH_BUDGET = 100_000_000
DEFAULT_GAMMA_BUDGET = 1_000_000

FOUND = "found"
EXHAUSTED = "exhausted-nonexistence"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchTranscript:
    nodes_explored: int
    outcome: str
    decomposition: StarDecomposition | None = None
    seed: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "nodes_explored": self.nodes_explored,
            "outcome": self.outcome,
            "decomposition": None
            if self.decomposition is None
            else self.decomposition.to_json_dict(),
            "seed": self.seed,
        }


class _BudgetHit(Exception):
    pass


def exhaustive_decomposition(
    g: Graph, k: int, budget: int = DEFAULT_SEARCH_BUDGET, gamma=None
) -> SearchTranscript:
    """Backtracking search for a k-star decomposition, optionally with the
    number of stars per center fixed to gamma.

    Edges are processed in lexicographic order; each is assigned to an open
    star at one of its endpoints or to a new star there. Stars at a vertex
    are therefore created in increasing order of first leaf, which breaks the
    symmetry between them. Exhaustion is definitive: either every branch was
    explored or the budget tripped.
    """
    if k < 2:
        raise ValueError("star size k must be at least 2")
    m = g.num_edges
    if m % k:
        return SearchTranscript(0, EXHAUSTED)
    if gamma is not None:
        gamma = tuple(int(x) for x in gamma)
        if len(gamma) != g.n or any(x < 0 for x in gamma):
            raise ValueError("bad gamma")
        if k * sum(gamma) != m:
            return SearchTranscript(0, EXHAUSTED)
        if any(k * gamma[x] > g.degree(x) for x in range(g.n)):
            # a center needs k distinct incident edges per star
            return SearchTranscript(0, EXHAUSTED)
        if any(gamma[u] == 0 and gamma[v] == 0 for u, v in g.edges):
            # every edge must get a star centered at one of its endpoints
            return SearchTranscript(0, EXHAUSTED)
    if m == 0:
        return SearchTranscript(0, FOUND, StarDecomposition(k, ()))

    edges = list(g.sorted_edges)
    rem = list(g.degrees)  # undecided edges incident to each vertex
    open_stars: list[list[list[int]]] = [[] for _ in range(g.n)]
    opened = [0] * g.n
    need = [0] * g.n  # missing leaves over open stars at each vertex
    nodes = 0

    def feasible(x: int) -> bool:
        if need[x] > rem[x]:
            return False
        if gamma is not None and need[x] + k * (gamma[x] - opened[x]) > rem[x]:
            return False
        return True

    def search(i: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        nodes += 1
        if nodes > budget:
            raise _BudgetHit
        u, v = edges[i]
        rem[u] -= 1
        rem[v] -= 1
        for center, leaf in ((u, v), (v, u)):
            for star in open_stars[center]:
                if len(star) >= k:
                    continue
                star.append(leaf)
                need[center] -= 1
                if feasible(u) and feasible(v) and search(i + 1):
                    return True
                need[center] += 1
                star.pop()
            may_open = gamma is None or opened[center] < gamma[center]
            if may_open:
                open_stars[center].append([leaf])
                opened[center] += 1
                need[center] += k - 1
                if feasible(u) and feasible(v) and search(i + 1):
                    return True
                need[center] -= k - 1
                opened[center] -= 1
                open_stars[center].pop()
        rem[u] += 1
        rem[v] += 1
        return False

    try:
        found = search(0)
    except _BudgetHit:
        return SearchTranscript(nodes, BUDGET_EXCEEDED)
    if not found:
        return SearchTranscript(nodes, EXHAUSTED)
    stars = [
        Star(x, tuple(sorted(star)))
        for x in range(g.n)
        for star in open_stars[x]
    ]
    return SearchTranscript(nodes, FOUND, StarDecomposition(k, tuple(stars)))


def enumerate_min_deficiency(g: Graph, k: int, gamma) -> tuple[int, list[tuple[int, ...]]]:
    """Exact minimum deficiency and all minimum-cardinality minimizing sets,
    by iterating every vertex subset. Limited to 20 vertices."""
    if g.n > 20:
        raise ValueError("subset enumeration limited to 20 vertices")
    gamma = tuple(int(x) for x in gamma)
    if len(gamma) != g.n:
        raise ValueError("bad gamma")
    edges = g.sorted_edges
    vmask = [0] * g.n
    for i, (u, v) in enumerate(edges):
        vmask[u] |= 1 << i
        vmask[v] |= 1 << i
    best_delta = 0
    best_size = 0
    best_sets: list[tuple[int, ...]] = [()]

    def walk(v: int, chosen: list[int], emask: int, gsum: int) -> None:
        nonlocal best_delta, best_size, best_sets
        if v == g.n:
            delta = emask.bit_count() - k * gsum
            size = len(chosen)
            if delta < best_delta or (delta == best_delta and size < best_size):
                best_delta = delta
                best_size = size
                best_sets = [tuple(chosen)]
            elif delta == best_delta and size == best_size and chosen:
                best_sets.append(tuple(chosen))
            return
        walk(v + 1, chosen, emask, gsum)
        chosen.append(v)
        walk(v + 1, chosen, emask | vmask[v], gsum + gamma[v])
        chosen.pop()

    walk(0, [], 0, 0)
    # the empty set seeds the initial best; drop the duplicate if it survived
    if best_delta == 0 and best_size == 0:
        best_sets = [()]
    return best_delta, best_sets


def gamma_caps(g: Graph, k: int) -> list[int]:
    return [g.degree(x) // k for x in range(g.n)]


def count_gamma_candidates(g: Graph, k: int) -> int:
    """Upper bound on the number of k-precentral gamma with k*gamma(x) <= deg(x)
    (ignores the edge-coverage pruning the enumerator applies)."""
    if g.num_edges % k:
        return 0
    b = g.num_edges // k
    counts = [1] + [0] * b
    for cap in gamma_caps(g, k):
        nxt = [0] * (b + 1)
        for total, ways in enumerate(counts):
            if not ways:
                continue
            for val in range(min(cap, b - total) + 1):
                nxt[total + val] += ways
        counts = nxt
    return counts[b]


def iter_gamma_candidates(g: Graph, k: int):
    """All k-precentral gamma with k*gamma(x) <= deg(x), pruned by the edge
    condition gamma(u) + gamma(v) >= 1, in lexicographic order."""
    if g.num_edges % k:
        return
    b = g.num_edges // k
    caps = gamma_caps(g, k)
    suffix = [0] * (g.n + 1)
    for x in range(g.n - 1, -1, -1):
        suffix[x] = suffix[x + 1] + caps[x]
    earlier = [sorted(w for w in g.neighbors(x) if w < x) for x in range(g.n)]
    gamma = [0] * g.n

    def assign(x: int, total: int):
        if x == g.n:
            if total == b:
                yield tuple(gamma)
            return
        if total + suffix[x] < b:
            return
        lo = 0
        if any(gamma[w] == 0 for w in earlier[x]):
            lo = 1
        for val in range(lo, min(caps[x], b - total) + 1):
            gamma[x] = val
            yield from assign(x + 1, total + val)
        gamma[x] = 0

    yield from assign(0, 0)


def exhaustive_gamma_search(
    g: Graph, k: int, budget: int = DEFAULT_GAMMA_BUDGET
) -> SearchTranscript:
    """Decide whether any k-star decomposition exists by enumerating candidate
    center-count functions and testing each with the flow solver."""
    if k < 2:
        raise ValueError("star size k must be at least 2")
    tried = 0
    for gamma in iter_gamma_candidates(g, k):
        tried += 1
        if tried > budget:
            return SearchTranscript(tried, BUDGET_EXCEEDED)
        result = decide_star_decomposition(g, k, gamma)
        if isinstance(result, StarDecomposition):
            return SearchTranscript(tried, FOUND, result)
    return SearchTranscript(tried, EXHAUSTED)


def sample_maximal_partial(n: int, k: int, seed: int) -> tuple[StarDecomposition, Graph]:
    """Random greedy maximal partial k-star decomposition of K_n.

    Stars are placed while some vertex still has k uncovered incident edges,
    so the leave always has maximum degree at most k-1. Deterministic for a
    fixed seed.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if k < 2:
        raise ValueError("star size k must be at least 2")
    rng = random.Random(seed)
    uncovered = [set(range(n)) - {v} for v in range(n)]
    stars: list[Star] = []
    while True:
        eligible = [v for v in range(n) if len(uncovered[v]) >= k]
        if not eligible:
            break
        center = rng.choice(eligible)
        leaves = rng.sample(sorted(uncovered[center]), k)
        stars.append(Star(center, tuple(sorted(leaves))))
        for leaf in leaves:
            uncovered[center].discard(leaf)
            uncovered[leaf].discard(center)
    leave_edges = frozenset(
        (u, v) for u in range(n) for v in uncovered[u] if u < v
    )
    leave = Graph(n, leave_edges)
    assert leave.max_degree() <= k - 1
    assert complete_graph(n).num_edges == leave.num_edges + k * len(stars)
    return StarDecomposition(k, tuple(stars)), leave
