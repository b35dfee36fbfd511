"""Exact rational bound evaluators and graph-level bound checks.

Every evaluator returns a Fraction computed with integer arithmetic only.
The short identifiers (eq1, theorem4, ...) are the stable names the CLI and
reports use; each maps to a descriptive evaluator below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import PreconditionError
from .graph import Graph, has_triangle, is_connected, is_tree, is_two_connected
from .steiner import avg_steiner_distance, steiner_wiener
from .transforms import weighted_sw_bound

__all__ = [
    "BoundReport",
    "BOUND_IDS",
    "wiener_upper",
    "wiener_upper_two_connected",
    "sw_upper",
    "wiener_upper_min_degree",
    "sw_upper_min_degree",
    "avg_upper_min_degree",
    "sw_upper_triangle_free",
    "avg_upper_triangle_free",
    "bound_rhs",
    "check",
    "applicable",
]

BOUND_IDS = (
    "eq1",
    "eq2",
    "theorem1",
    "theorem3",
    "lemma2",
    "theorem4",
    "corollary1",
    "theorem5",
    "corollary2",
)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one checked condition.

    `slack` is oriented as a margin: the condition holds iff slack >= 0.
    `vacuous` marks upper bounds at or above the trivial ceiling.
    """

    name: str
    params: dict = field(compare=False)
    measured: Fraction
    rhs: Fraction
    slack: Fraction
    passed: bool
    vacuous: bool = False

    def __str__(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = " vacuous" if self.vacuous else ""
        return (
            f"{self.name} {tag} measured={self.measured} rhs={self.rhs} "
            f"slack={self.slack}{extra}"
        )


def wiener_upper(n: int) -> Fraction:
    """Largest Wiener index of a connected order-n graph (paths attain it)."""
    if n < 1:
        raise PreconditionError("order must be >= 1")
    return Fraction(n + 1, 3) * comb(n, 2)


def wiener_upper_two_connected(n: int) -> Fraction:
    """Largest Wiener index of a 2-connected graph (cycles attain it)."""
    if n < 3:
        raise PreconditionError("2-connected graphs need n >= 3")
    return Fraction(n, 2) * (n * n // 4)


def sw_upper(n: int, k: int) -> Fraction:
    """Largest Steiner k-Wiener index of a connected order-n graph."""
    if n < 1:
        raise PreconditionError("order must be >= 1")
    if not 1 <= k <= n:
        raise PreconditionError(f"k={k} out of range 1..{n}")
    return Fraction((k - 1) * (n + 1), k + 1) * comb(n, k)


def wiener_upper_min_degree(n: int, delta: int) -> Fraction:
    """Wiener bound for connected graphs with minimum degree delta."""
    if n < 1:
        raise PreconditionError("order must be >= 1")
    if delta < 1:
        raise PreconditionError("minimum degree must be >= 1")
    return (Fraction(n, delta + 1) + 2) * comb(n, 2)


def _sw_min_degree_rhs(n: int, delta: int, k: int) -> Fraction:
    binom = comb(n, k)
    lead = Fraction(k - 1, k + 1) * Fraction(3 * (n + 1), delta + 1) * binom
    rest = (Fraction(3 * delta, delta + 1) + 2 * k) * binom
    return lead + rest


def sw_upper_min_degree(n: int, delta: int, k: int) -> Fraction:
    """Steiner k-Wiener bound for connected graphs with min degree delta."""
    if n < 1:
        raise PreconditionError("order must be >= 1")
    if delta < 1:
        raise PreconditionError("minimum degree must be >= 1")
    if not 1 <= k <= n:
        raise PreconditionError(f"k={k} out of range 1..{n}")
    return _sw_min_degree_rhs(n, delta, k)


def avg_upper_min_degree(n: int, delta: int, k: int) -> Fraction:
    """Average-Steiner-distance form of the min-degree bound."""
    if delta < 1:
        raise PreconditionError("minimum degree must be >= 1")
    if n < 1 or not 1 <= k <= n:
        raise PreconditionError("need 1 <= k <= n")
    return (
        Fraction(k - 1, k + 1) * Fraction(3 * (n + 1), delta + 1)
        + Fraction(3 * delta, delta + 1)
        + 2 * k
    )


def _sw_triangle_free_rhs(n: int, delta: int, k: int) -> Fraction:
    binom = comb(n, k)
    lead = Fraction(k - 1, k + 1) * Fraction(2 * (n + 1), delta) * binom
    rest = (Fraction(4 * delta - 2, delta) + 3 * k + 1) * binom
    return lead + rest


def sw_upper_triangle_free(n: int, delta: int, k: int) -> Fraction:
    """Steiner k-Wiener bound for connected triangle-free graphs."""
    if n < 1:
        raise PreconditionError("order must be >= 1")
    if delta < 1:
        raise PreconditionError("minimum degree must be >= 1")
    if not 1 <= k <= n:
        raise PreconditionError(f"k={k} out of range 1..{n}")
    return _sw_triangle_free_rhs(n, delta, k)


def avg_upper_triangle_free(n: int, delta: int, k: int) -> Fraction:
    """Average form of the triangle-free bound."""
    if delta < 1:
        raise PreconditionError("minimum degree must be >= 1")
    if n < 1 or not 1 <= k <= n:
        raise PreconditionError("need 1 <= k <= n")
    return (
        Fraction(k - 1, k + 1) * Fraction(2 * (n + 1), delta)
        + Fraction(4 * delta - 2, delta)
        + 3 * k
        + 1
    )


def bound_rhs(which: str, **params) -> Fraction:
    """Evaluate a bound RHS from explicit parameters (CLI `bound` command).

    Parameter names: n, delta, k for graph bounds; N (total weight) and C
    (minimum weight) for the weighted tree bound.
    """
    if which == "eq1":
        return wiener_upper(_need(params, "n"))
    if which == "eq2":
        return wiener_upper_two_connected(_need(params, "n"))
    if which == "theorem1":
        return sw_upper(_need(params, "n"), _need(params, "k"))
    if which == "theorem3":
        return wiener_upper_min_degree(_need(params, "n"), _need(params, "delta"))
    if which == "lemma2":
        return weighted_sw_bound(_need(params, "N"), _need(params, "C"), _need(params, "k"))
    if which == "theorem4":
        return sw_upper_min_degree(_need(params, "n"), _need(params, "delta"), _need(params, "k"))
    if which == "corollary1":
        return avg_upper_min_degree(_need(params, "n"), _need(params, "delta"), _need(params, "k"))
    if which == "theorem5":
        return sw_upper_triangle_free(_need(params, "n"), _need(params, "delta"), _need(params, "k"))
    if which == "corollary2":
        return avg_upper_triangle_free(_need(params, "n"), _need(params, "delta"), _need(params, "k"))
    raise PreconditionError(f"unknown bound '{which}'")


def _need(params: dict, key: str) -> int:
    if params.get(key) is None:
        raise PreconditionError(f"bound needs parameter --{key}")
    return params[key]


def applicable(g: Graph, which: str, k: int) -> tuple[bool, str]:
    """Whether a bound's structural precondition holds for g (with reason)."""
    if which not in BOUND_IDS:
        raise PreconditionError(f"unknown bound '{which}'")
    n = g.n
    if not is_connected(g):
        return False, "graph is disconnected"
    if which in ("eq1", "eq2", "theorem3"):
        if n < 2:
            return False, "needs n >= 2 (Wiener index over pairs)"
    else:
        if not 1 <= k <= n:
            return False, f"k={k} out of range 1..{n}"
    if which == "eq2" and not is_two_connected(g):
        return False, "graph is not 2-connected"
    if which == "lemma2" and not is_tree(g):
        return False, "graph is not a tree"
    if which in ("theorem3", "theorem4", "corollary1", "theorem5", "corollary2"):
        if n < 2 or g.min_degree() < 1:
            return False, "needs minimum degree >= 1"
    if which in ("theorem5", "corollary2") and has_triangle(g):
        return False, "graph contains a triangle"
    return True, ""


def check(g: Graph, which: str, k: int = 2) -> BoundReport:
    """Measure the bounded quantity on g exactly and compare to the RHS."""
    ok, reason = applicable(g, which, k)
    if not ok:
        raise PreconditionError(f"bound '{which}' not applicable: {reason}")
    n = g.n
    params: dict = {"n": n}
    if which in ("eq1", "eq2"):
        eff_k = 2
        measured = Fraction(steiner_wiener(g, 2))
        rhs = wiener_upper(n) if which == "eq1" else wiener_upper_two_connected(n)
    elif which == "theorem3":
        eff_k = 2
        delta = g.min_degree()
        params["delta"] = delta
        measured = Fraction(steiner_wiener(g, 2))
        rhs = wiener_upper_min_degree(n, delta)
    elif which == "theorem1":
        eff_k = k
        params["k"] = k
        measured = Fraction(steiner_wiener(g, k))
        rhs = sw_upper(n, k)
    elif which == "lemma2":
        eff_k = k
        params.update(k=k, N=n, C=1)
        measured = Fraction(steiner_wiener(g, k))
        rhs = weighted_sw_bound(n, 1, k)
    elif which in ("theorem4", "theorem5"):
        eff_k = k
        delta = g.min_degree()
        params.update(delta=delta, k=k)
        measured = Fraction(steiner_wiener(g, k))
        rhs = (
            sw_upper_min_degree(n, delta, k)
            if which == "theorem4"
            else sw_upper_triangle_free(n, delta, k)
        )
    else:  # corollary1 / corollary2
        eff_k = k
        delta = g.min_degree()
        params.update(delta=delta, k=k)
        measured = avg_steiner_distance(g, k)
        rhs = (
            avg_upper_min_degree(n, delta, k)
            if which == "corollary1"
            else avg_upper_triangle_free(n, delta, k)
        )
    if which in ("corollary1", "corollary2"):
        ceiling = Fraction(n - 1)
    else:
        ceiling = Fraction((n - 1) * comb(n, eff_k))
    slack = rhs - measured
    return BoundReport(
        name=which,
        params=params,
        measured=measured,
        rhs=rhs,
        slack=slack,
        passed=slack >= 0,
        vacuous=rhs >= ceiling,
    )
