"""Simple undirected graphs and the structural helpers everything else uses.

Vertices are dense ints 0..n-1. Adjacency is kept sorted so that every
iteration order in the library is deterministic. Distances use ``None`` as
the unreachable marker, never a sentinel integer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GraphFormatError, PreconditionError


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with canonical (sorted) neighbor tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            prev = -1
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if v <= prev:
                    raise ValueError(f"adjacency of {u} not strictly sorted")
                prev = v
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u not in self.adj[v]:
                    raise ValueError(f"edge {u}-{v} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from (u, v) pairs; order inside a pair is free."""
        lists: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u},{v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
        return cls(n, tuple(tuple(sorted(l)) for l in lists))

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        if self.n == 0:
            raise PreconditionError("minimum degree of the empty graph is undefined")
        return min(len(nbrs) for nbrs in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def norm_edge(u: int, v: int) -> tuple[int, int]:
    """Canonical (min, max) form of an edge id."""
    return (u, v) if u < v else (v, u)


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from source; unreachable vertices get None."""
    if not 0 <= source < g.n:
        raise PreconditionError(f"source {source} out of range")
    dist: list = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] is None:
                dist[v] = du + 1
                queue.append(v)
    return dist


def bfs_from_set(g: Graph, sources) -> list:
    """Hop distances to the nearest of several sources (None if unreachable)."""
    dist: list = [None] * g.n
    queue = deque()
    for s in sorted(set(sources)):
        if not 0 <= s < g.n:
            raise PreconditionError(f"source {s} out of range")
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] is None:
                dist[v] = du + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> list:
    """Distance matrix as a list of BFS rows (None marks unreachable pairs)."""
    return [bfs_distances(g, u) for u in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return sum(1 for d in bfs_distances(g, 0) if d is not None) == g.n


def diameter(g: Graph) -> int:
    """Largest hop distance over all pairs; requires a connected graph."""
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("diameter needs a non-empty connected graph")
    return max(d for u in range(g.n) for d in bfs_distances(g, u))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_two_connected(g: Graph) -> bool:
    """n >= 3, connected, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    for cut in range(g.n):
        start = 0 if cut != 0 else 1
        dist: list = [None] * g.n
        dist[start] = 0
        queue = deque([start])
        reached = 1
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v != cut and dist[v] is None:
                    dist[v] = dist[u] + 1
                    reached += 1
                    queue.append(v)
        if reached != g.n - 1:
            return False
    return True


def has_triangle(g: Graph) -> bool:
    """Edge scan: an edge whose endpoints share a neighbor closes a triangle."""
    nbr_sets = [set(nbrs) for nbrs in g.adj]
    for u in range(g.n):
        for v in g.adj[u]:
            if u < v and nbr_sets[u] & nbr_sets[v]:
                return True
    return False


def power_graph(g: Graph, p: int, restrict_to=None) -> tuple[Graph, list[int]]:
    """p-th power, optionally restricted to a vertex subset.

    Vertices u, v become adjacent when 1 <= d_G(u, v) <= p (distances in the
    full graph, even when restricting). Returns the relabeled graph together
    with the id map new_id -> old_id.
    """
    if p < 1:
        raise PreconditionError("power must be >= 1")
    if restrict_to is None:
        keep = list(range(g.n))
    else:
        keep = sorted(set(restrict_to))
        for v in keep:
            if not 0 <= v < g.n:
                raise PreconditionError(f"restricted vertex {v} out of range")
    index = {old: new for new, old in enumerate(keep)}
    edges = []
    for old_u in keep:
        dist = bfs_distances(g, old_u)
        for old_v in keep:
            if old_v > old_u:
                d = dist[old_v]
                if d is not None and d <= p:
                    edges.append((index[old_u], index[old_v]))
    return Graph.from_edges(len(keep), edges), keep


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph plus the map line-vertex id -> original edge."""
    edge_list = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    ledges = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                ledges.add((ids[a], ids[b]))
    return Graph.from_edges(len(edge_list), sorted(ledges)), edge_list


def edge_distance(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> int:
    """Min distance between an endpoint of e1 and an endpoint of e2."""
    a, b = norm_edge(*e1)
    x, y = norm_edge(*e2)
    for u, v in ((a, b), (x, y)):
        if not g.has_edge(u, v):
            raise PreconditionError(f"edge ({u},{v}) not in graph")
    best = None
    for s in (a, b):
        dist = bfs_distances(g, s)
        for t in (x, y):
            d = dist[t]
            if d is not None and (best is None or d < best):
                best = d
    if best is None:
        raise PreconditionError("edges lie in different components")
    return best


def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` / `u v` edge-list format (u < v per line).

    Strict: LF line endings, no comments or blank interior lines, exactly m
    edge lines, ids in range, no loops or duplicates.
    """
    if "\r" in text:
        raise GraphFormatError("expected LF line endings")
    lines = text.split("\n")
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphFormatError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("first line must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError("first line must hold two integers") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be non-negative")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from exc
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range")
        if not u < v:
            raise GraphFormatError(f"line {lineno}: edges must be written u < v")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    """Canonical serialization; parse(format(g)) == g."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
