"""Embed a leave of a partial k-star decomposition of K_n into K_{n+s}.

Equivalently: find s and a k-star decomposition of L v K_s. Candidate s are
scanned from 0; each divisible s is rejected fast (edge with two low-degree
endpoints, or an independence-number obstruction) or attempted. For s >= k
the construction is complete: a small-edge-count instance succeeds exactly
when L has a large enough independent set, and a large-edge-count instance
always succeeds, with center counts 1 on the base and near-uniform d/d+1 on
the join set. For s < k no complete procedure is known, so an exact bounded
search runs and honest "unknown-skipped" entries appear in the certificate
when it is cut off.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import oracle
from .exactnum import RootBound, Surd
from .graphs import Graph, join, join_edge_count
from .independence import (
    DEFAULT_ALPHA_BUDGET,
    BudgetExceeded,
    caro_wei_bounds,
    independence_number,
    maximum_independent_set,
)
from .solver import (
    Star,
    StarDecomposition,
    decide_star_decomposition,
    two_star_decompose,
    validate_decomposition,
)

REASON_DIVISIBILITY = "divisibility"
REASON_OBSTACLE = "obstacle"
REASON_DEGREE_PAIR = "degree-pair"
REASON_EXHAUSTED = "exhausted-nonexistence"
REASON_UNKNOWN = "unknown-skipped"

DEFAULT_GAMMA_SEARCH_BUDGET = 2000


class ObstacleViolated(Exception):
    """The independence-number obstruction rules the instance out."""

    def __init__(self, alpha: int, required: int):
        super().__init__(f"alpha={alpha} below required independent set size {required}")
        self.alpha = alpha
        self.required = required


@dataclass(frozen=True)
class Rejection:
    s: int
    reason: str
    detail: dict | None = None

    def to_json_dict(self) -> dict:
        return {"s": self.s, "reason": self.reason, "detail": self.detail}


@dataclass(frozen=True)
class EmbeddingCertificate:
    k: int
    n: int
    s: int
    decomposition: StarDecomposition
    rejections: tuple[Rejection, ...]
    minimality: str  # "exact" when every smaller s was rejected definitively

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "s": self.s,
            "minimality": self.minimality,
            "decomposition": self.decomposition.to_json_dict(),
            "rejections": [r.to_json_dict() for r in self.rejections],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "EmbeddingCertificate":
        return EmbeddingCertificate(
            int(data["k"]),
            int(data["n"]),
            int(data["s"]),
            StarDecomposition.from_json_dict(data["decomposition"]),
            tuple(
                Rejection(int(r["s"]), str(r["reason"]), r.get("detail"))
                for r in data["rejections"]
            ),
            str(data["minimality"]),
        )


@dataclass(frozen=True)
class ObstacleReport:
    status: str  # "passes" | "passes-by-bound" | "violated" | "inconclusive"
    required: int
    alpha: int | None = None
    bound: Fraction | None = None


def degree_pair_check(base: Graph, k: int, s: int) -> tuple[int, int] | None:
    """First edge of L v K_s whose endpoints both have degree below k, if any.

    Such an edge cannot be covered: a star covering it would have to be
    centered at one of its endpoints.
    """
    n = base.n
    join_deg = n + s - 1
    for u, v in base.sorted_edges:
        if base.degree(u) + s < k and base.degree(v) + s < k:
            return (u, v)
    if s >= 1 and join_deg < k:
        for u in range(n):
            if base.degree(u) + s < k:
                return (u, n)
        if s >= 2:
            return (n, n + 1)
    return None


def obstacle_check(
    base: Graph,
    k: int,
    s: int,
    alpha: int | None = None,
    alpha_budget: int = DEFAULT_ALPHA_BUDGET,
) -> ObstacleReport:
    """Necessary condition: alpha(L) >= n + s - |E(L v K_s)| / k.

    With the exact independence number the verdict is definite either way.
    If its search is cut off, a true lower bound can still certify a pass
    ("passes-by-bound"); otherwise the check is inconclusive.
    """
    m = join_edge_count(base, s)
    if m % k:
        raise ValueError("edge count of the join must be divisible by k")
    required = base.n + s - m // k
    if required <= 0:
        return ObstacleReport("passes", required)
    if alpha is None:
        try:
            alpha = independence_number(base, alpha_budget)
        except BudgetExceeded:
            alpha = None
    if alpha is not None:
        if alpha >= required:
            return ObstacleReport("passes", required, alpha=alpha)
        return ObstacleReport("violated", required, alpha=alpha)
    sum_form, _ = caro_wei_bounds(base)
    if sum_form >= required:
        return ObstacleReport("passes-by-bound", required, bound=sum_form)
    return ObstacleReport("inconclusive", required, bound=sum_form)


def embed_small_case(
    base: Graph, k: int, s: int, alpha_budget: int = DEFAULT_ALPHA_BUDGET
) -> StarDecomposition:
    """Decompose L v K_s when |E(L v K_s)| <= k(n+s).

    Centers: one star everywhere except on an independent set of L of size
    (n+s) - |E|/k, taken as a prefix of the lexicographically smallest
    maximum independent set. Succeeds iff such a set exists; raises
    ObstacleViolated otherwise.
    """
    n = base.n
    m = join_edge_count(base, s)
    if s < k or k < 2:
        raise ValueError("small-case construction needs s >= k >= 2")
    if base.max_degree() > k - 1:
        raise ValueError("leave must have maximum degree at most k-1")
    if m % k:
        raise ValueError("edge count of the join must be divisible by k")
    if m > k * (n + s):
        raise ValueError("small-case construction needs |E| <= k(n+s)")
    b = m // k
    required = n + s - b
    zero_set: tuple[int, ...] = ()
    if required > 0:
        best = maximum_independent_set(base, alpha_budget)
        if len(best) < required:
            raise ObstacleViolated(len(best), required)
        zero_set = best[:required]
    gamma = [1] * (n + s)
    for x in zero_set:
        gamma[x] = 0
    result = decide_star_decomposition(join(base, s), k, gamma)
    if not isinstance(result, StarDecomposition):
        raise RuntimeError(
            "flow refused a small-case instance whose independent set exists"
        )
    return result


def embed_large_case(base: Graph, k: int, s: int) -> StarDecomposition:
    """Decompose L v K_s when |E(L v K_s)| >= k(n+s) and n >= k.

    Centers: one star per base vertex; join vertices get d or d+1 stars with
    d = floor((b-n)/s), the d+1 values on the lowest join labels. This is
    guaranteed feasible, so a flow failure here is an internal error.
    """
    n = base.n
    m = join_edge_count(base, s)
    if s < k or k < 2:
        raise ValueError("large-case construction needs s >= k >= 2")
    if n < k:
        raise ValueError("large-case construction needs n >= k")
    if base.max_degree() > k - 1:
        raise ValueError("leave must have maximum degree at most k-1")
    if m % k:
        raise ValueError("edge count of the join must be divisible by k")
    if m < k * (n + s):
        raise ValueError("large-case construction needs |E| >= k(n+s)")
    b = m // k
    d = (b - n) // s
    extras = b - n - s * d
    gamma = [1] * n + [d + 1] * extras + [d] * (s - extras)
    result = decide_star_decomposition(join(base, s), k, gamma)
    if not isinstance(result, StarDecomposition):
        raise RuntimeError("flow refused a large-case instance; this cannot happen")
    return result


def greedy_star_removal(base: Graph, k: int) -> tuple[tuple[Star, ...], Graph]:
    """Remove k-stars (lowest center, lowest leaves first) until the graph has
    maximum degree at most k-1. Returns the stars removed and the remainder."""
    adj = [set(base.neighbors(v)) for v in range(base.n)]
    stars: list[Star] = []
    v = 0
    while v < base.n:
        if len(adj[v]) >= k:
            leaves = sorted(adj[v])[:k]
            stars.append(Star(v, tuple(leaves)))
            for w in leaves:
                adj[v].discard(w)
                adj[w].discard(v)
        else:
            v += 1
    edges = frozenset(
        (u, w) for u in range(base.n) for w in adj[u] if u < w
    )
    return tuple(stars), Graph(base.n, edges)


def guaranteed_s(n: int, k: int) -> tuple[int, str]:
    """An embedding size that always works for a leave with these (n, k).

    Always strictly below (9/4)k for odd k and (6-2*sqrt(2))k for even k;
    embed() succeeds at or before it. The case split: for large n any
    divisible s past a fixed fraction of k clears the independence bound,
    for middling n the target K_{4k} (or K_{3k} for odd k, where the leave
    contains a large clique and the refined bound applies) works, and for
    n <= k the partial decomposition is empty so K_{2k} absorbs it.
    """
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    if k == 2:
        s = next(s for s in range(1, 5) if (n + s) % 4 == 0)
        tag = "k2-parity"
    elif k % 2 == 0:
        if n * n >= 8 * k * k:
            start = Surd.of(4 * k, -2 * k, 2)  # (4 - 2*sqrt(2)) k
            s = 0
            while not (start < s) or (n + s) % (2 * k) != 0:
                s += 1
            tag = "even-large-n"
        elif n >= k + 1:
            s = 4 * k - n
            tag = "even-mid-n"
        else:
            s = 2 * k - n
            tag = "even-empty"
    else:
        if n * n >= 8 * k * k:
            s = (5 * k + 3) // 4  # smallest integer >= 5k/4
            while (n + s) % k != 0:
                s += 1
            tag = "odd-large-n"
        elif 4 * n > 7 * k:
            s = 4 * k - n
            tag = "odd-mid-n"
        elif n >= k + 1:
            s = 3 * k - n
            tag = "odd-clique-leave"
        else:
            s = 2 * k - n
            tag = "odd-empty"
    if k % 2 == 1 and k > 2:
        assert Fraction(s) < Fraction(9 * k, 4)
    else:
        assert Surd.of(6 * k, -2 * k, 2) > s
    return s, tag


def embed(
    base: Graph,
    k: int,
    max_s: int | None = None,
    gamma_budget: int = DEFAULT_GAMMA_SEARCH_BUDGET,
    alpha_budget: int = DEFAULT_ALPHA_BUDGET,
) -> EmbeddingCertificate:
    """Smallest-s embedding certificate for a leave of a partial decomposition.

    If the graph still has a vertex of degree >= k, stars are greedily
    removed first and added back into the final decomposition; all checks run
    against the reduced leave, which has the same embeddability. Minimality
    is "exact" when every smaller divisible s was rejected for a definite
    reason and "conditional" when any search was cut off by its budget.
    """
    if k < 2:
        raise ValueError("star size k must be at least 2")
    n = base.n
    removed, core = greedy_star_removal(base, k)
    limit = guaranteed_s(n, k)[0] if max_s is None else max_s
    rejections: list[Rejection] = []
    definite = True
    alpha_cache: list[int | None] = []  # lazily filled; [None] means cut off

    def core_alpha() -> int | None:
        if not alpha_cache:
            try:
                alpha_cache.append(independence_number(core, alpha_budget))
            except BudgetExceeded:
                alpha_cache.append(None)
        return alpha_cache[0]

    def success(s: int, found: StarDecomposition) -> EmbeddingCertificate:
        merged = StarDecomposition(k, removed + found.stars)
        problem = validate_decomposition(join(base, s), merged)
        if problem is not None:
            raise RuntimeError(f"embedding failed validation: {problem}")
        flag = "exact" if definite else "conditional"
        return EmbeddingCertificate(k, n, s, merged, tuple(rejections), flag)

    for s in range(0, limit + 1):
        m = join_edge_count(core, s)
        if m % k:
            rejections.append(Rejection(s, REASON_DIVISIBILITY))
            continue
        edge = degree_pair_check(core, k, s)
        if edge is not None:
            rejections.append(
                Rejection(s, REASON_DEGREE_PAIR, {"edge": list(edge)})
            )
            continue
        required = n + s - m // k
        inconclusive = False
        if required > 0:
            alpha = core_alpha()
            if alpha is not None and alpha < required:
                rejections.append(
                    Rejection(
                        s, REASON_OBSTACLE, {"alpha": alpha, "required": required}
                    )
                )
                continue
            if alpha is None and caro_wei_bounds(core)[0] < required:
                inconclusive = True
        if k == 2:
            found = two_star_decompose(join(core, s))
            if found is None:
                rejections.append(
                    Rejection(s, REASON_EXHAUSTED, {"by": "component-parity"})
                )
                continue
            return success(s, found)
        if s >= k:
            if inconclusive:
                # cannot build the small-case center set without exact alpha
                rejections.append(Rejection(s, REASON_UNKNOWN, {"alpha": "budget"}))
                definite = False
                continue
            if m >= k * (n + s) and n >= k:
                return success(s, embed_large_case(core, k, s))
            try:
                return success(s, embed_small_case(core, k, s, alpha_budget))
            except ObstacleViolated as exc:
                rejections.append(
                    Rejection(
                        s,
                        REASON_OBSTACLE,
                        {"alpha": exc.alpha, "required": exc.required},
                    )
                )
                continue
        else:
            target = join(core, s)
            upper = oracle.count_gamma_candidates(target, k)
            if upper > gamma_budget:
                rejections.append(
                    Rejection(s, REASON_UNKNOWN, {"gamma_candidates": upper})
                )
                definite = False
                continue
            transcript = oracle.exhaustive_gamma_search(target, k, budget=gamma_budget)
            if transcript.outcome == oracle.FOUND:
                return success(s, transcript.decomposition)
            if transcript.outcome == oracle.EXHAUSTED:
                rejections.append(
                    Rejection(
                        s,
                        REASON_EXHAUSTED,
                        {"gamma_candidates": transcript.nodes_explored},
                    )
                )
                continue
            rejections.append(Rejection(s, REASON_UNKNOWN, {"gamma_search": "budget"}))
            definite = False
            continue
    raise RuntimeError(
        f"no embedding found for s <= {limit}; either max_s was set below the "
        "guaranteed bound or the input is not the leave of a partial decomposition"
    )


@dataclass(frozen=True)
class BoundReport:
    """All embedding-size bounds for (n, k), exactly comparable to integers."""

    k: int
    n: int
    s_lower_general: RootBound
    s_lower_clique: RootBound | None
    n_threshold: Surd
    general_cap: Surd | Fraction
    large_n_cap: int

    def n_above_threshold(self) -> bool:
        return self.n_threshold < self.n

    def general_cap_allows(self, s: int) -> bool:
        if isinstance(self.general_cap, Fraction):
            return Fraction(s) < self.general_cap
        return self.general_cap > s

    def large_n_cap_allows(self, s: int) -> bool:
        return s <= self.large_n_cap

    def to_json_dict(self) -> dict:
        def root_entry(bound: RootBound | None) -> dict | None:
            if bound is None:
                return None
            return {
                "approx": float(bound),
                "min_integer_s_above": bound.min_integer_above(),
            }

        return {
            "k": self.k,
            "n": self.n,
            "s_lower_general": root_entry(self.s_lower_general),
            "s_lower_clique": root_entry(self.s_lower_clique),
            "n_threshold": {
                "approx": float(self.n_threshold),
                "n_above_threshold": self.n_above_threshold(),
            },
            "general_cap": {"approx": float(self.general_cap)},
            "large_n_cap": self.large_n_cap,
        }


def bound_report(n: int, k: int) -> BoundReport:
    """Exact bound values; k >= 3 (k = 2 is settled by component parity)."""
    if k < 3:
        raise ValueError("bound formulas need k >= 3")
    if n < 1:
        raise ValueError("need n >= 1")
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    general = RootBound(
        Fraction(k - n) + half,
        Surd.of(Fraction(n * n + k * k - k) + quarter, -2 * n, 2 * k),
    )
    clique = None
    if k < n <= 2 * k:
        clique = RootBound(
            Fraction(k - n) + half,
            Surd.of(Fraction(4 * k * (n - k) + k * k - k) + quarter, -4 * k, 2 * (n - k)),
        )
    thr = Fraction(k * (k - 1), 8 * k - 1)
    threshold = Surd.of(thr, thr, 8 * k)
    if k % 2 == 1:
        cap: Surd | Fraction = Fraction(9 * k, 4)
        s1_cap = 2 * k - 2
    else:
        cap = Surd.of(6 * k, -2 * k, 2)
        s1_cap = 3 * k - 2
    return BoundReport(k, n, general, clique, threshold, cap, s1_cap)
