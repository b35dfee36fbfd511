"""Spanning-tree constructions with machine-checkable certificates.

Both constructors grow a forest of local stars around a set of anchors kept
pairwise far apart, connect consecutive stars with single edges, attach the
leftover vertices, and record enough data (anchors, connectors, weights,
nearest-anchor assignment) for an independent verifier to re-check every
structural claim and the resulting index bound.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bounds import BoundReport, _sw_min_degree_rhs, _sw_triangle_free_rhs
from .errors import PreconditionError
from .graph import (
    Graph,
    bfs_distances,
    bfs_from_set,
    has_triangle,
    is_connected,
    is_tree,
    line_graph,
    norm_edge,
    power_graph,
)
from .steiner import steiner_wiener_weighted_tree
from .weights import WeightFn

__all__ = [
    "PackingCertificate",
    "MatchingCertificate",
    "packing_spanning_tree",
    "matching_spanning_tree",
    "verify_certificate",
    "certificate_to_json",
    "certificate_from_json",
]


@dataclass(frozen=True)
class PackingCertificate:
    """Spanning tree built around a distance-3 packing of anchor vertices.

    weights[i] = (anchor, count) pairs; assignment[v] = the anchor v was
    credited to (a nearest one, reachable within 2 tree edges).
    """

    tree: Graph
    anchors: tuple[int, ...]
    connectors: tuple[tuple[int, int], ...]
    weights: tuple[tuple[int, int], ...]
    assignment: tuple[int, ...]

    def weight_map(self) -> dict:
        return dict(self.weights)

    def path_lengths(self) -> tuple[int, ...]:
        return _assignment_path_lengths(self.tree, self.assignment)


@dataclass(frozen=True)
class MatchingCertificate:
    """Spanning tree built around an edge-distance-3 matching.

    anchors holds the matching edges in discovery order; weights and
    assignment live on the matched vertices.
    """

    tree: Graph
    anchors: tuple[tuple[int, int], ...]
    connectors: tuple[tuple[int, int], ...]
    weights: tuple[tuple[int, int], ...]
    assignment: tuple[int, ...]

    def weight_map(self) -> dict:
        return dict(self.weights)

    def matched_vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.anchors for v in e}))

    def path_lengths(self) -> tuple[int, ...]:
        return _assignment_path_lengths(self.tree, self.assignment)


def _assignment_path_lengths(tree: Graph, assignment) -> tuple[int, ...]:
    rows = {a: bfs_distances(tree, a) for a in sorted(set(assignment))}
    return tuple(rows[assignment[v]][v] for v in range(tree.n))


def _nearest_assignment(g: Graph, anchors) -> list[int]:
    """Per-vertex nearest anchor, ties broken by lowest anchor id."""
    best_d = [None] * g.n
    best_a = [None] * g.n
    for a in sorted(anchors):
        row = bfs_distances(g, a)
        for v in range(g.n):
            d = row[v]
            if d is None:
                continue
            if best_d[v] is None or d < best_d[v]:
                best_d[v] = d
                best_a[v] = a
    return best_a


def _walk_middle_edge(g: Graph, start: int, goal_row, length: int) -> tuple[int, int]:
    """Follow a shortest path of the given length from start toward the goal
    (lowest-id neighbor each step) and return its middle edge."""
    path = [start]
    cur = start
    for _ in range(length):
        step = next(
            v for v in g.adj[cur] if goal_row[v] == goal_row[cur] - 1
        )
        path.append(step)
        cur = step
    mid = length // 2
    return norm_edge(path[mid], path[mid + 1])


def packing_spanning_tree(g: Graph, start: int = 0) -> PackingCertificate:
    """Grow stars around a maximal distance-3 packing of anchors.

    New anchors are taken at distance exactly 3 from the current packing
    (lowest id first); consecutive stars are joined by the middle edge of a
    shortest path to the nearest earlier anchor. Leftover vertices all sit
    at distance 2 and attach next to their assigned anchor.
    """
    if not is_connected(g) or g.n == 0:
        raise PreconditionError("graph must be connected and non-empty")
    if not 0 <= start < g.n:
        raise PreconditionError(f"start vertex {start} out of range")
    anchors = [start]
    tree_edges = {norm_edge(start, x) for x in g.adj[start]}
    in_tree = {start} | set(g.adj[start])
    connectors: list[tuple[int, int]] = []
    while True:
        dist_set = bfs_from_set(g, anchors)
        candidate = next(
            (v for v in range(g.n) if dist_set[v] == 3), None
        )
        if candidate is None:
            break
        star = {candidate} | set(g.adj[candidate])
        if star & in_tree:
            raise AssertionError("new star overlaps the grown forest")
        tree_edges.update(norm_edge(candidate, x) for x in g.adj[candidate])
        from_cand = bfs_distances(g, candidate)
        nearest = next(a for a in sorted(anchors) if from_cand[a] == 3)
        to_nearest = bfs_distances(g, nearest)
        connector = _walk_middle_edge(g, candidate, to_nearest, 3)
        tree_edges.add(connector)
        connectors.append(connector)
        anchors.append(candidate)
        in_tree |= star
    dist_set = bfs_from_set(g, anchors)
    uncovered = [v for v in range(g.n) if dist_set[v] > 2]
    if uncovered:
        raise AssertionError(f"vertices beyond distance 2 of the packing: {uncovered}")
    assignment = _nearest_assignment(g, anchors)
    for v in range(g.n):
        if v in in_tree:
            continue
        a = assignment[v]
        hook = next(x for x in g.adj[v] if g.has_edge(x, a))
        tree_edges.add(norm_edge(v, hook))
    tree = Graph.from_edges(g.n, sorted(tree_edges))
    if not is_tree(tree):
        raise AssertionError("packing construction did not produce a tree")
    tally: dict = {a: 0 for a in anchors}
    for a in assignment:
        tally[a] += 1
    return PackingCertificate(
        tree=tree,
        anchors=tuple(anchors),
        connectors=tuple(connectors),
        weights=tuple(sorted(tally.items())),
        assignment=tuple(assignment),
    )


def matching_spanning_tree(g: Graph, start_edge=None) -> MatchingCertificate:
    """Triangle-free counterpart: grow double stars around a matching whose
    edges stay pairwise at edge-distance >= 3.

    New matching edges are taken at edge-distance exactly 3 (lowest (u, v)
    first). Leftover vertices attach layer by layer outward from the star
    forest, which preserves every vertex's distance to the matched set.
    """
    if not is_connected(g) or g.n < 2:
        raise PreconditionError("graph must be connected with at least one edge")
    if has_triangle(g):
        raise PreconditionError("graph contains a triangle")
    all_edges = g.edges()
    if start_edge is None:
        first = all_edges[0]
    else:
        first = norm_edge(*start_edge)
        if not g.has_edge(*first):
            raise PreconditionError(f"start edge {first} not in graph")
    matching = [first]
    matched: list[int] = [first[0], first[1]]
    tree_edges = set()
    for end in first:
        tree_edges.update(norm_edge(end, x) for x in g.adj[end])
    in_tree = set(g.adj[first[0]]) | set(g.adj[first[1]])
    connectors: list[tuple[int, int]] = []
    while True:
        dist_set = bfs_from_set(g, matched)
        candidate = next(
            (
                (u, v)
                for u, v in all_edges
                if min(dist_set[u], dist_set[v]) == 3
            ),
            None,
        )
        if candidate is None:
            break
        star = set(g.adj[candidate[0]]) | set(g.adj[candidate[1]])
        if star & in_tree:
            raise AssertionError("new double star overlaps the grown forest")
        for end in candidate:
            tree_edges.update(norm_edge(end, x) for x in g.adj[end])
        rows = {z: bfs_distances(g, z) for z in candidate}
        nearest_pair = min(
            (m, z)
            for z in candidate
            for m in matched
            if rows[z][m] == 3
        )
        to_nearest = bfs_distances(g, nearest_pair[0])
        connector = _walk_middle_edge(g, nearest_pair[1], to_nearest, 3)
        tree_edges.add(connector)
        connectors.append(connector)
        matching.append(candidate)
        matched.extend(candidate)
        in_tree |= star
    dist_set = bfs_from_set(g, matched)
    bad_edges = [e for e in all_edges if min(dist_set[e[0]], dist_set[e[1]]) > 2]
    if bad_edges:
        raise AssertionError(f"edges beyond edge-distance 2 of the matching: {bad_edges}")
    far = [v for v in range(g.n) if dist_set[v] > 3]
    if far:
        raise AssertionError(f"vertices beyond distance 3 of the matched set: {far}")
    # attach the rest outward from the star forest; discovery edges keep
    # every distance to the matched set intact
    layer = [None] * g.n
    queue = deque()
    for v in sorted(in_tree):
        layer[v] = 0
        queue.append(v)
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if layer[v] is None:
                layer[v] = layer[u] + 1
                tree_edges.add(norm_edge(u, v))
                queue.append(v)
    tree = Graph.from_edges(g.n, sorted(tree_edges))
    if not is_tree(tree):
        raise AssertionError("matching construction did not produce a tree")
    tree_dist = bfs_from_set(tree, matched)
    if tree_dist != dist_set:
        raise AssertionError("attachment failed to preserve distances to the matching")
    # assign along tree distances: the tree realizes every set-distance, so
    # each vertex has a matched vertex within 3 tree hops
    assignment = _nearest_assignment(tree, matched)
    tally: dict = {v: 0 for v in matched}
    for a in assignment:
        tally[a] += 1
    return MatchingCertificate(
        tree=tree,
        anchors=tuple(matching),
        connectors=tuple(connectors),
        weights=tuple(sorted(tally.items())),
        assignment=tuple(assignment),
    )


def _report(name, measured, rhs, mode, params=None, vacuous=False) -> BoundReport:
    measured = Fraction(measured)
    rhs = Fraction(rhs)
    if mode == "le":
        slack = rhs - measured
    elif mode == "ge":
        slack = measured - rhs
    else:  # eq
        slack = -abs(measured - rhs)
    return BoundReport(
        name=name,
        params=params or {},
        measured=measured,
        rhs=rhs,
        slack=slack,
        passed=slack >= 0,
        vacuous=vacuous,
    )


def _check_spanning_tree(cert, g: Graph) -> BoundReport:
    t = cert.tree
    violations = 0
    if t.n != g.n:
        violations += 1
    violations += sum(1 for u, v in t.edges() if not g.has_edge(u, v))
    if not is_tree(t):
        violations += 1
    return _report("spanning_tree", violations, 0, "eq", {"edges": t.m})


def verify_certificate(cert, g: Graph, k: int = 2) -> list[BoundReport]:
    """Re-check every structural claim of a certificate against g, plus the
    index bound on the constructed tree. One report per condition; a report
    passes iff its slack is >= 0."""
    if isinstance(cert, PackingCertificate):
        return _verify_packing(cert, g, k)
    if isinstance(cert, MatchingCertificate):
        return _verify_matching(cert, g, k)
    raise PreconditionError("unknown certificate type")


def _verify_packing(cert: PackingCertificate, g: Graph, k: int) -> list[BoundReport]:
    n = g.n
    reports = [_check_spanning_tree(cert, g)]
    anchors = cert.anchors
    rows = {a: bfs_distances(g, a) for a in anchors}
    pair_min = min(
        (rows[a][b] for a in anchors for b in anchors if a < b),
        default=3,
    )
    reports.append(
        _report("packing_pairwise_distance", pair_min, 3, "ge", {"anchors": len(anchors)})
    )
    dist_set = bfs_from_set(g, anchors)
    reports.append(_report("vertex_coverage", max(dist_set), 2, "le"))
    wmap = cert.weight_map()
    delta = g.min_degree()
    reports.append(
        _report(
            "anchor_weight",
            min(wmap.get(a, 0) for a in anchors),
            delta + 1,
            "ge",
            {"delta": delta},
        )
    )
    reports.append(_report("weight_total", sum(wmap.values()), n, "eq"))
    tally_ok = sorted(wmap.items()) == sorted(
        (a, sum(1 for x in cert.assignment if x == a)) for a in anchors
    )
    bad_assign = sum(
        1
        for v in range(n)
        if cert.assignment[v] not in rows or rows[cert.assignment[v]][v] != dist_set[v]
    )
    reports.append(
        _report("assignment_nearest", bad_assign + (0 if tally_ok else 1), 0, "eq")
    )
    tree_rows = {a: bfs_distances(cert.tree, a) for a in set(cert.assignment)}
    hops = [tree_rows[cert.assignment[v]][v] for v in range(n)]
    max_hop = max((n if h is None else h for h in hops), default=0)
    reports.append(_report("anchor_paths_in_tree", max_hop, 2, "le"))
    cubed, _ = power_graph(cert.tree, 3, anchors)
    reports.append(_report("anchor_power3_connected", int(is_connected(cubed)), 1, "ge"))
    sw = steiner_wiener_weighted_tree(cert.tree, WeightFn.uniform(n), k)
    rhs = _sw_min_degree_rhs(n, delta, k)
    reports.append(
        _report(
            "sw_within_min_degree_bound",
            sw,
            rhs,
            "le",
            {"n": n, "delta": delta, "k": k},
            vacuous=rhs >= (n - 1) * comb(n, k),
        )
    )
    return reports


def _verify_matching(cert: MatchingCertificate, g: Graph, k: int) -> list[BoundReport]:
    n = g.n
    reports = [_check_spanning_tree(cert, g)]
    edges = cert.anchors
    matched = cert.matched_vertices()
    flat = [v for e in edges for v in e]
    is_matching = len(flat) == len(set(flat)) and all(
        g.has_edge(u, v) for u, v in edges
    )
    reports.append(_report("edges_form_matching", int(is_matching), 1, "ge"))
    rows = {v: bfs_distances(g, v) for v in matched}
    pair_min = 3
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            d = min(rows[x][y] for x in edges[i] for y in edges[j])
            pair_min = min(pair_min, d)
    reports.append(
        _report("matching_pairwise_edge_distance", pair_min, 3, "ge", {"edges": len(edges)})
    )
    dist_set = bfs_from_set(g, matched)
    edge_cover = max(
        (min(dist_set[u], dist_set[v]) for u, v in g.edges()), default=0
    )
    reports.append(_report("edge_coverage", edge_cover, 2, "le"))
    reports.append(_report("vertex_coverage", max(dist_set), 3, "le"))
    wmap = cert.weight_map()
    delta = g.min_degree()
    reports.append(
        _report(
            "anchor_weight",
            min(wmap.get(v, 0) for v in matched),
            delta,
            "ge",
            {"delta": delta},
        )
    )
    pair_weight = min(
        (wmap.get(u, 0) + wmap.get(v, 0) for u, v in edges), default=2 * delta
    )
    reports.append(_report("matched_pair_weight", pair_weight, 2 * delta, "ge"))
    reports.append(_report("weight_total", sum(wmap.values()), n, "eq"))
    tally_ok = sorted(wmap.items()) == sorted(
        (v, sum(1 for x in cert.assignment if x == v)) for v in matched
    )
    # assignment is validated against tree distances: each vertex must be
    # credited to a matched vertex realizing its tree set-distance
    matched_set = set(matched)
    tree_set = bfs_from_set(cert.tree, matched)
    tree_rows = {a: bfs_distances(cert.tree, a) for a in sorted(set(cert.assignment))}
    bad_assign = sum(
        1
        for v in range(n)
        if cert.assignment[v] not in matched_set
        or tree_rows[cert.assignment[v]][v] != tree_set[v]
    )
    reports.append(
        _report("assignment_nearest", bad_assign + (0 if tally_ok else 1), 0, "eq")
    )
    hops = [tree_rows[cert.assignment[v]][v] for v in range(n)]
    max_hop = max((n if h is None else h for h in hops), default=0)
    reports.append(_report("anchor_paths_in_tree", max_hop, 3, "le"))
    drift = sum(1 for v in range(n) if tree_set[v] != dist_set[v])
    reports.append(_report("distance_preservation", drift, 0, "eq"))
    lg, edge_ids = line_graph(cert.tree)
    index = {e: i for i, e in enumerate(edge_ids)}
    try:
        line_vertices = [index[norm_edge(*e)] for e in edges]
    except KeyError:
        reports.append(_report("line_power4_connected", 0, 1, "ge"))
    else:
        powered, _ = power_graph(lg, 4, line_vertices)
        reports.append(
            _report("line_power4_connected", int(is_connected(powered)), 1, "ge")
        )
    sw = steiner_wiener_weighted_tree(cert.tree, WeightFn.uniform(n), k)
    rhs = _sw_triangle_free_rhs(n, delta, k)
    reports.append(
        _report(
            "sw_within_triangle_free_bound",
            sw,
            rhs,
            "le",
            {"n": n, "delta": delta, "k": k},
            vacuous=rhs >= (n - 1) * comb(n, k),
        )
    )
    return reports


def certificate_to_json(cert) -> str:
    """Five-field schema: tree_edges, anchors, connectors, weights, assignment.

    Packing anchors are vertex ids; matching anchors are [u, v] pairs. The
    serialization is canonical so equal certificates produce identical bytes.
    """
    payload = {
        "tree_edges": [list(e) for e in cert.tree.edges()],
        "anchors": [
            list(a) if isinstance(a, tuple) else a for a in cert.anchors
        ],
        "connectors": [list(e) for e in cert.connectors],
        "weights": [list(p) for p in cert.weights],
        "assignment": list(cert.assignment),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def certificate_from_json(text: str):
    """Inverse of certificate_to_json; the certificate kind is inferred from
    the shape of the anchors field."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"bad certificate JSON: {exc}") from exc
    try:
        assignment = tuple(int(v) for v in payload["assignment"])
        n = len(assignment)
        tree = Graph.from_edges(
            n, [tuple(e) for e in payload["tree_edges"]]
        )
        connectors = tuple(norm_edge(*e) for e in payload["connectors"])
        weights = tuple((int(v), int(w)) for v, w in payload["weights"])
        raw_anchors = payload["anchors"]
        if raw_anchors and isinstance(raw_anchors[0], list):
            anchors = tuple(tuple(int(x) for x in a) for a in raw_anchors)
            return MatchingCertificate(tree, anchors, connectors, weights, assignment)
        anchors = tuple(int(a) for a in raw_anchors)
        return PackingCertificate(tree, anchors, connectors, weights, assignment)
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"malformed certificate: {exc}") from exc
