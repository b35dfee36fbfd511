"""Seeded random graph ensembles shared by the test modules.

Everything takes an explicit random.Random so failures reproduce exactly.
"""

import heapq
import random

from swindex import Graph, WeightFn


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via sequence decoding."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng: random.Random, extra: float = 0.3) -> Graph:
    """Random tree plus each non-tree edge independently with prob `extra`."""
    t = random_tree(n, rng)
    edges = set(t.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_connected_bipartite(n: int, rng: random.Random, extra: float = 0.3) -> Graph:
    """Connected bipartite graph: spanning tree alternating sides where it
    can, then random cross-side edges."""
    assert n >= 2
    order = list(range(n))
    rng.shuffle(order)
    side = {order[0]: 0, order[1]: 1}
    edges = {(min(order[0], order[1]), max(order[0], order[1]))}
    for i in range(2, n):
        v = order[i]
        side[v] = rng.randrange(2)
        others = [u for u in order[:i] if side[u] != side[v]]
        if not others:
            side[v] = 1 - side[v]
            others = [u for u in order[:i] if side[u] != side[v]]
        u = rng.choice(others)
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] != side[v] and (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def subdivide_all(g: Graph) -> Graph:
    """Full subdivision: every edge becomes a 2-edge path through a fresh
    vertex. Always triangle-free."""
    edges = []
    next_id = g.n
    for u, v in g.edges():
        edges.append((u, next_id))
        edges.append((v, next_id))
        next_id += 1
    return Graph.from_edges(next_id, edges)


def random_weights(n: int, rng: random.Random, lo: int = 0, hi: int = 3) -> WeightFn:
    return WeightFn([rng.randint(lo, hi) for _ in range(n)])
