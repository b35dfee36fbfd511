"""Branch-relocation moves on weighted trees.

A move detaches a bundle of branches from a pivot u and reattaches it at a
neighbor w. The induced change of the weighted Steiner k-Wiener index has a
binomial closed form; repeatedly applying moves with the heavier side kept
at the pivot straightens any weighted tree into a path without ever
decreasing the index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import PreconditionError
from .graph import Graph, is_tree
from .weights import as_weights

__all__ = [
    "BranchMove",
    "relocate_branches",
    "relocation_sw_delta",
    "straighten_to_path",
    "weighted_sw_bound",
    "moves_to_json",
]


@dataclass(frozen=True)
class BranchMove:
    """Detach the branches hanging at `branches` (neighbors of u) and hang
    them at w instead. Requires the u-w edge and branches ⊆ N(u) - {w}."""

    tree: Graph
    u: int
    w: int
    branches: frozenset

    def __post_init__(self) -> None:
        t = self.tree
        if not is_tree(t):
            raise PreconditionError("move host is not a tree")
        if not t.has_edge(self.u, self.w):
            raise PreconditionError(f"no edge {self.u}-{self.w}")
        if not self.branches:
            raise PreconditionError("empty branch set")
        for a in self.branches:
            if a == self.w:
                raise PreconditionError("branch set may not contain w")
            if not t.has_edge(self.u, a):
                raise PreconditionError(f"branch {a} is not a neighbor of u")

    def partition(self) -> tuple[frozenset, frozenset, frozenset]:
        """(U, W, X): the u-side and w-side of the remaining tree around the
        u-w edge, and the vertex set of the moved branches."""
        t = self.tree
        u_side = self._component(self.u, banned_at_u=self.branches | {self.w})
        w_side = self._component(self.w, banned_at_w={self.u})
        moved = frozenset(range(t.n)) - u_side - w_side
        return u_side, w_side, moved

    def _component(self, start: int, banned_at_u=frozenset(), banned_at_w=frozenset()):
        t = self.tree
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in t.adj[x]:
                if x == self.u and y in banned_at_u:
                    continue
                if x == self.w and y in banned_at_w:
                    continue
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)


def relocate_branches(move: BranchMove) -> Graph:
    """Apply the move; the result is checked to still be a tree."""
    t = move.tree
    removed = {(min(move.u, a), max(move.u, a)) for a in move.branches}
    edges = [e for e in t.edges() if e not in removed]
    edges.extend((min(move.w, a), max(move.w, a)) for a in sorted(move.branches))
    out = Graph.from_edges(t.n, edges)
    if not is_tree(out):
        raise AssertionError("branch relocation broke the tree")
    return out


def relocation_sw_delta(move: BranchMove, weights, k: int) -> int:
    """Closed-form change of the weighted Steiner k-Wiener index.

    Counting k-subsets of copies that meet the moved branches and exactly
    one side of the u-w edge gives
        sum_i C(c(X), k-i) * (C(c(U), i) - C(c(W), i)),  i = 1..k-1,
    positive whenever the u-side outweighs the w-side and enough total
    weight is present for k-subsets to exist.
    """
    c = as_weights(weights, move.tree.n)
    if k < 1:
        raise PreconditionError("k must be >= 1")
    u_side, w_side, moved = move.partition()
    cu = c.weight_of(u_side)
    cw = c.weight_of(w_side)
    cx = c.weight_of(moved)
    return sum(
        comb(cx, k - i) * (comb(cu, i) - comb(cw, i)) for i in range(1, k)
    )


def straighten_to_path(tree: Graph, weights, k: int) -> tuple[Graph, list[BranchMove]]:
    """Iron a weighted tree into a path by repeated branch relocation.

    At the smallest-id vertex of degree >= 3, branches are ordered by weight
    (descending, ties by smallest contained vertex id); all but the two
    lightest move to the neighbor inside the lightest branch. Each move
    keeps the heavier side at the pivot, so the weighted index never drops
    along the trace. Returns the final path and the move trace.
    """
    if not is_tree(tree):
        raise PreconditionError("input is not a tree")
    c = as_weights(weights, tree.n)
    for v in range(tree.n):
        if c[v] < 1:
            raise PreconditionError("straightening requires weights >= 1")
    if not 1 <= k <= c.total:
        raise PreconditionError(f"k={k} out of range 1..{c.total}")
    t = tree
    trace: list[BranchMove] = []
    while True:
        pivot = next((v for v in range(t.n) if t.degree(v) >= 3), None)
        if pivot is None:
            break
        comps = []
        for nb in t.adj[pivot]:
            seen = {pivot, nb}
            stack = [nb]
            while stack:
                x = stack.pop()
                for y in t.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comp = seen - {pivot}
            comps.append((-c.weight_of(comp), min(comp), nb))
        comps.sort()
        moved = frozenset(nb for _, _, nb in comps[:-2])
        target = comps[-1][2]
        move = BranchMove(t, pivot, target, moved)
        t = relocate_branches(move)
        trace.append(move)
        if len(trace) > tree.n:
            raise AssertionError("straightening exceeded its move budget")
    return t, trace


def weighted_sw_bound(total_weight: int, min_weight: int, k: int) -> Fraction:
    """Largest weighted Steiner k-Wiener index a tree can reach, given total
    weight and the smallest vertex weight (paths with the light vertex at an
    end are the extremal shape)."""
    if min_weight < 1:
        raise PreconditionError("minimum weight must be >= 1")
    if not 1 <= k <= total_weight:
        raise PreconditionError(f"k={k} out of range 1..{total_weight}")
    binom = comb(total_weight, k)
    lead = Fraction(k - 1, k + 1) * Fraction(total_weight + 1, min_weight) * binom
    rest = Fraction(min_weight - 1, min_weight) * binom
    return lead + rest


def moves_to_json(trace) -> str:
    """Audit form of a move trace: array of {u, w, A} records."""
    rows = [
        {"u": mv.u, "w": mv.w, "A": sorted(mv.branches)} for mv in trace
    ]
    return json.dumps(rows, sort_keys=True, separators=(",", ":"))
