"""Graph generators: classic families, sequential joins, and the two layered
families whose indices track the minimum-degree and triangle-free bounds.

Layered families are built as sequential sums (disjoint union plus a complete
join between consecutive layers), so their diameters equal the number of
joins and their structure is easy to audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import PreconditionError
from .graph import Graph, diameter, has_triangle
from .steiner import steiner_wiener

__all__ = [
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "complete_bipartite",
    "classic",
    "sequential_sum",
    "min_degree_extremal",
    "triangle_free_extremal",
    "SweepRow",
    "tightness_sweep",
    "sweep_csv",
]


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise PreconditionError("vertex count must be non-negative")
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to the given number of leaves."""
    if leaves < 0:
        raise PreconditionError("leaf count must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs at least one vertex")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise PreconditionError("both sides need at least one vertex")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def classic(family: str, size: int, size2=None) -> Graph:
    """Dispatch table used by the command line."""
    if family == "path":
        return path_graph(size)
    if family == "cycle":
        return cycle_graph(size)
    if family == "star":
        return star_graph(size)
    if family == "complete":
        return complete_graph(size)
    if family == "complete_bipartite":
        if size2 is None:
            raise PreconditionError("complete_bipartite needs two sizes")
        return complete_bipartite(size, size2)
    raise PreconditionError(f"unknown family {family!r}")


def sequential_sum(parts) -> Graph:
    """Disjoint union with a complete join between consecutive parts.

    Part i occupies the id block starting at sum of earlier part sizes.
    """
    parts = list(parts)
    if not parts:
        raise PreconditionError("sequential sum needs at least one part")
    if any(p.n == 0 for p in parts):
        raise PreconditionError("sequential sum parts must be non-empty")
    offsets = []
    total = 0
    edges = []
    for p in parts:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in p.edges())
        total += p.n
    for i in range(len(parts) - 1):
        lo = offsets[i]
        mid = lo + parts[i].n
        hi = mid + parts[i + 1].n
        edges.extend((a, b) for a in range(lo, mid) for b in range(mid, hi))
    return Graph.from_edges(total, edges)


def min_degree_extremal(d: int, delta: int) -> Graph:
    """Layered graph of diameter d whose index approaches the minimum-degree
    upper bound as d grows.

    Layout: a clique of size delta at each end, d-1 cliques of size
    s = (delta+1)/3 between them; delta+1 must be divisible by 3. Minimum
    degree is exactly delta once an interior clique sits between two other
    interior cliques (d >= 4, or any d >= 2 when delta = 2); smaller
    diameters degenerate toward complete graphs.
    """
    if d < 1:
        raise PreconditionError("diameter must be at least 1")
    if delta < 2:
        raise PreconditionError("minimum degree must be at least 2")
    if (delta + 1) % 3 != 0:
        raise PreconditionError("delta + 1 must be divisible by 3")
    s = (delta + 1) // 3
    parts = (
        [complete_graph(delta)]
        + [complete_graph(s) for _ in range(d - 1)]
        + [complete_graph(delta)]
    )
    g = sequential_sum(parts)
    assert g.n == (d + 5) * (delta + 1) // 3 - 2
    assert diameter(g) == d
    if d == 1:
        expected = 2 * delta - 1  # the two end cliques merge into one
    elif d <= 3:
        expected = delta - 1 + s  # end-clique vertices still dominate
    else:
        expected = delta
    assert g.min_degree() == expected
    return g


def triangle_free_extremal(d: int, delta: int) -> Graph:
    """Layered graph of diameter d and minimum degree delta tracking the
    triangle-free upper bound; genuinely triangle-free when delta = 2 or
    when there are no interior layers (d = 3).

    Layout: two independent sets of size delta at each end, d-3 cliques of
    size delta/2 between them; delta must be even.
    """
    if d < 3:
        raise PreconditionError("diameter must be at least 3")
    if delta < 2 or delta % 2 != 0:
        raise PreconditionError("delta must be even and at least 2")
    side = [empty_graph(delta), empty_graph(delta)]
    middle = [complete_graph(delta // 2) for _ in range(d - 3)]
    g = sequential_sum(side + middle + list(reversed(side)))
    assert g.n == 4 * delta + (d - 3) * delta // 2
    assert diameter(g) == d
    assert g.min_degree() == delta
    assert has_triangle(g) == (delta > 2 and d > 3)
    return g


@dataclass(frozen=True)
class SweepRow:
    """One diameter step of a tightness sweep."""

    d: int
    n: int
    sw: int
    bound_term: Fraction
    ratio: Fraction
    has_triangle: bool


def _leading_term(family: str, n: int, delta: int, k: int) -> Fraction:
    """Growth term of the relevant upper bound (the part that scales with n)."""
    if family == "G":
        per_set = Fraction(3 * n, delta + 1)
    elif family == "H":
        per_set = Fraction(2 * n, delta)
    else:
        raise PreconditionError(f"unknown sweep family {family!r}")
    return Fraction(k - 1, k + 1) * per_set * comb(n, k)


def tightness_sweep(family: str, delta: int, k: int, d_values, max_subsets: int = 5_000_000):
    """Exact index-to-bound ratios across a range of diameters.

    family "G" uses the minimum-degree layout against the minimum-degree
    bound's growth term; "H" uses the triangle-free layout against the
    triangle-free term. Ratios are exact rationals.
    """
    if k < 2:
        raise PreconditionError("sweep needs k >= 2")
    rows = []
    for d in d_values:
        if family == "G":
            g = min_degree_extremal(d, delta)
        elif family == "H":
            g = triangle_free_extremal(d, delta)
        else:
            raise PreconditionError(f"unknown sweep family {family!r}")
        if k > g.n:
            raise PreconditionError(f"k={k} exceeds n={g.n} at d={d}")
        if comb(g.n, k) > max_subsets:
            raise PreconditionError(
                f"sweep at d={d} needs {comb(g.n, k)} subsets (cap {max_subsets})"
            )
        sw = steiner_wiener(g, k)
        term = _leading_term(family, g.n, delta, k)
        rows.append(
            SweepRow(
                d=d,
                n=g.n,
                sw=sw,
                bound_term=term,
                ratio=Fraction(sw) / term,
                has_triangle=has_triangle(g),
            )
        )
    return rows


def _ratio_str(x: Fraction) -> str:
    """Six-decimal fixed point, computed without floats."""
    scaled = round(x * 1_000_000)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 1_000_000}.{scaled % 1_000_000:06d}"


def sweep_csv(rows) -> str:
    out = ["d,n,sw_k,bound_term,ratio"]
    for r in rows:
        out.append(f"{r.d},{r.n},{r.sw},{r.bound_term},{_ratio_str(r.ratio)}")
    return "\n".join(out) + "\n"
