"""Exact Steiner distances and Steiner k-Wiener indices.

The Steiner distance of a terminal set S is the edge count of a smallest
connected subgraph containing S. Sums over all k-subsets give the k-Wiener
index; the weighted variants count every vertex with multiplicity c(v).
All arithmetic is exact (ints and fractions.Fraction).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import PreconditionError
from .graph import Graph, bfs_distances, is_connected, is_tree
from .weights import as_weights

__all__ = [
    "steiner_distance",
    "steiner_distance_tree",
    "steiner_wiener",
    "avg_steiner_distance",
    "steiner_wiener_weighted",
    "steiner_wiener_weighted_naive",
    "steiner_wiener_weighted_tree",
]


def _require_connected(g: Graph) -> None:
    if g.n == 0:
        raise PreconditionError("graph has no vertices")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise PreconditionError("graph is not a tree")


def _finite_all_pairs(g: Graph) -> list[list[int]]:
    _require_connected(g)
    return [bfs_distances(g, u) for u in range(g.n)]


def _terminal_tuple(g: Graph, terminals) -> tuple[int, ...]:
    ts = sorted(set(terminals))
    if not ts:
        raise PreconditionError("terminal set is empty")
    if ts[0] < 0 or ts[-1] >= g.n:
        raise PreconditionError("terminal out of range")
    return tuple(ts)


def _steiner_from_dist(dist: list[list[int]], terminals: tuple[int, ...]) -> int:
    """Dynamic program over (terminal-subset, vertex) states.

    States are seeded with the precomputed distance matrix; each composite
    subset is solved by merging complementary sub-subsets at a vertex and
    then relaxing once through the metric closure. Runs fresh per call; no
    state is shared between terminal sets beyond `dist`.
    """
    s = len(terminals)
    if s == 1:
        return 0
    if s == 2:
        return dist[terminals[0]][terminals[1]]
    root = terminals[-1]
    base = terminals[:-1]
    m = len(base)
    n = len(dist)
    rng = range(n)
    full = (1 << m) - 1
    big = n * s  # strictly above any Steiner value
    table: list = [None] * (full + 1)
    for i, t in enumerate(base):
        table[1 << i] = dist[t]
    for mask in range(3, full + 1):
        if table[mask] is not None:
            continue
        low = mask & -mask
        merged = [big] * n
        sub = (mask - 1) & mask
        while sub:
            if sub & low:
                left, right = table[sub], table[mask ^ sub]
                for v in rng:
                    cand = left[v] + right[v]
                    if cand < merged[v]:
                        merged[v] = cand
            sub = (sub - 1) & mask
        if mask == full:
            # only the root's value is needed for the outermost subset
            drow = dist[root]
            return min(merged[u] + drow[u] for u in rng)
        closed = merged[:]
        for u in rng:
            mu = merged[u]
            du = dist[u]
            for v in rng:
                cand = mu + du[v]
                if cand < closed[v]:
                    closed[v] = cand
        table[mask] = closed
    raise AssertionError("unreachable")


def steiner_distance(g: Graph, terminals) -> int:
    """Fewest edges of a connected subgraph containing all terminals."""
    ts = _terminal_tuple(g, terminals)
    _require_connected(g)
    if len(ts) == 1:
        return 0
    return _steiner_from_dist(_finite_all_pairs(g), ts)


def steiner_distance_tree(t: Graph, terminals) -> int:
    """Tree fast path: half the cyclic sum of consecutive terminal distances
    in depth-first discovery order."""
    _require_tree(t)
    ts = _terminal_tuple(t, terminals)
    if len(ts) == 1:
        return 0
    tin = [0] * t.n
    seen = [False] * t.n
    stack = [0]
    clock = 0
    while stack:
        u = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        tin[u] = clock
        clock += 1
        for v in reversed(t.adj[u]):
            if not seen[v]:
                stack.append(v)
    order = sorted(ts, key=lambda v: tin[v])
    rows = {v: bfs_distances(t, v) for v in order}
    total = 0
    for i, v in enumerate(order):
        nxt = order[(i + 1) % len(order)]
        total += rows[v][nxt]
    if total % 2:
        raise AssertionError("odd cyclic distance sum on a tree")
    return total // 2


def _require_k(k: int, upper: int, what: str) -> None:
    if not 1 <= k <= upper:
        raise PreconditionError(f"k={k} out of range 1..{upper} ({what})")


def steiner_wiener(g: Graph, k: int) -> int:
    """Sum of Steiner distances over all k-subsets of vertices."""
    _require_connected(g)
    _require_k(k, g.n, "subset size vs vertex count")
    if k == 1:
        return 0
    dist = _finite_all_pairs(g)
    return sum(_steiner_from_dist(dist, combo) for combo in combinations(range(g.n), k))


def avg_steiner_distance(g: Graph, k: int) -> Fraction:
    """Mean Steiner distance of a k-subset, as an exact fraction."""
    return Fraction(steiner_wiener(g, k), comb(g.n, k))


def _exact_multiplicity(c, originals: tuple[int, ...], k: int) -> int:
    """Number of k-subsets of copies whose original set is exactly `originals`
    (inclusion-exclusion over sub-collections)."""
    s = len(originals)
    total = 0
    for r in range(s + 1):
        sign = 1 if (s - r) % 2 == 0 else -1
        for sub in combinations(originals, r):
            total += sign * comb(c.weight_of(sub), k)
    return total


def steiner_wiener_weighted(g: Graph, weights, k: int) -> int:
    """Weighted index via grouping: every k-subset of copies with original
    set S* contributes d(S*), so group by S* and weigh by the exact count."""
    c = as_weights(weights, g.n)
    _require_connected(g)
    _require_k(k, c.total, "subset size vs total weight")
    if k == 1:
        return 0
    support = c.support()
    dist = _finite_all_pairs(g)
    total = 0
    for size in range(2, min(k, len(support)) + 1):
        for combo in combinations(support, size):
            if c.weight_of(combo) < k:
                continue
            mult = _exact_multiplicity(c, combo, k)
            if mult:
                total += mult * _steiner_from_dist(dist, combo)
    return total


def steiner_wiener_weighted_naive(g: Graph, weights, k: int) -> int:
    """Copy-materializing oracle: literally enumerate k-subsets of copies.

    Exponential in total weight; kept as the reference the grouped version
    is checked against.
    """
    c = as_weights(weights, g.n)
    _require_connected(g)
    _require_k(k, c.total, "subset size vs total weight")
    copies = [v for v in range(g.n) for _ in range(c[v])]
    dist = _finite_all_pairs(g)
    memo: dict = {}
    total = 0
    for combo in combinations(range(len(copies)), k):
        originals = frozenset(copies[i] for i in combo)
        if len(originals) == 1:
            continue
        d = memo.get(originals)
        if d is None:
            d = _steiner_from_dist(dist, tuple(sorted(originals)))
            memo[originals] = d
        total += d
    return total


def steiner_wiener_weighted_tree(t: Graph, weights, k: int) -> int:
    """Tree fast path: an edge lies in the minimal subtree of a copy-set
    exactly when both sides hold a copy, so sum per-edge cut counts."""
    _require_tree(t)
    c = as_weights(weights, t.n)
    _require_k(k, c.total, "subset size vs total weight")
    parent = [-1] * t.n
    order = []
    seen = [False] * t.n
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for v in t.adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    side = [c[v] for v in range(t.n)]
    for u in reversed(order):
        p = parent[u]
        if p >= 0:
            side[p] += side[u]
    total_count = comb(c.total, k)
    result = 0
    for v in range(t.n):
        if parent[v] >= 0:
            a = side[v]
            result += total_count - comb(a, k) - comb(c.total - a, k)
    return result
