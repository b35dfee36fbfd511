import random
from fractions import Fraction
from math import comb

import pytest

from swindex import (
    BOUND_IDS,
    Graph,
    PreconditionError,
    applicable,
    avg_upper_min_degree,
    avg_upper_triangle_free,
    bound_rhs,
    check,
    complete_graph,
    cycle_graph,
    path_graph,
    steiner_wiener,
    sw_upper,
    sw_upper_min_degree,
    sw_upper_triangle_free,
    wiener_upper,
    wiener_upper_min_degree,
    wiener_upper_two_connected,
)

from ensembles import random_connected_bipartite, random_connected_graph


def test_evaluator_values():
    assert wiener_upper(7) == 56
    assert wiener_upper(4) == 10
    assert wiener_upper_two_connected(5) == 15
    assert wiener_upper_two_connected(6) == 27
    assert sw_upper(10, 3) == 660
    assert sw_upper(4, 2) == 10
    assert wiener_upper_min_degree(7, 1) == Fraction(231, 2)
    assert wiener_upper_min_degree(16, 5) == 560
    assert sw_upper_min_degree(16, 5, 2) == 1120
    assert sw_upper_min_degree(7, 1, 2) == Fraction(399, 2)
    assert sw_upper_triangle_free(9, 2, 2) == 480
    assert sw_upper_triangle_free(6, 2, 3) == 330
    assert avg_upper_min_degree(16, 5, 2) == Fraction(1120, comb(16, 2))
    assert avg_upper_triangle_free(9, 2, 2) == Fraction(480, comb(9, 2))


def test_bound_rhs_dispatch():
    assert bound_rhs("eq1", n=7) == 56
    assert bound_rhs("eq2", n=5) == 15
    assert bound_rhs("theorem1", n=10, k=3) == 660
    assert bound_rhs("theorem3", n=7, delta=1) == Fraction(231, 2)
    assert bound_rhs("lemma2", N=3, C=1, k=2) == 4
    assert bound_rhs("theorem4", n=16, delta=5, k=2) == 1120
    assert bound_rhs("theorem5", n=9, delta=2, k=2) == 480
    assert bound_rhs("corollary1", n=16, delta=5, k=2) == Fraction(
        1120, comb(16, 2)
    )
    with pytest.raises(PreconditionError):
        bound_rhs("theorem4", n=16, k=2)  # delta missing
    with pytest.raises(PreconditionError):
        bound_rhs("nosuch", n=3)


def test_applicability():
    p4 = path_graph(4)
    ok, reason = applicable(p4, "eq2", 2)
    assert not ok and "2-connected" in reason
    ok, _ = applicable(cycle_graph(5), "eq2", 2)
    assert ok
    ok, reason = applicable(complete_graph(4), "theorem5", 2)
    assert not ok and "triangle" in reason
    ok, reason = applicable(cycle_graph(4), "lemma2", 2)
    assert not ok and "tree" in reason
    ok, reason = applicable(p4, "theorem1", 9)
    assert not ok
    two = Graph.from_edges(3, [(0, 1)])
    for name in BOUND_IDS:
        ok, reason = applicable(two, name, 2)
        assert not ok and "disconnected" in reason


def test_check_tight_cases():
    rep = check(path_graph(7), "eq1", 2)
    assert rep.passed and rep.slack == 0
    rep = check(path_graph(7), "theorem1", 2)
    assert rep.passed and rep.slack == 0
    rep = check(cycle_graph(5), "eq2", 2)
    assert rep.passed and rep.slack == 0
    rep = check(path_graph(7), "lemma2", 3)
    assert rep.passed and rep.slack == 0  # unit-weight path meets the tree bound
    with pytest.raises(PreconditionError):
        check(complete_graph(4), "theorem5", 2)


def test_corollaries_scale_theorems():
    g = cycle_graph(6)
    for k in (2, 3):
        t4 = check(g, "theorem4", k)
        c1 = check(g, "corollary1", k)
        assert c1.rhs == t4.rhs / comb(g.n, k)
        assert c1.measured == t4.measured / comb(g.n, k)
        assert c1.passed == t4.passed


def test_report_string_shape():
    rep = check(path_graph(4), "eq1", 2)
    text = str(rep)
    assert text.startswith("eq1 PASS measured=10 rhs=10 slack=0")
    rep = check(path_graph(4), "theorem4", 2)
    assert "vacuous" in str(rep)  # small n, bound above the trivial ceiling


def test_all_bounds_hold_on_random_graphs():
    rng = random.Random(61)
    for _ in range(30):
        n = rng.randint(3, 8)
        g = random_connected_graph(n, rng)
        k = rng.randint(2, min(n, 4))
        for name in BOUND_IDS:
            ok, _ = applicable(g, name, k)
            if ok:
                assert check(g, name, k).passed, (name, g.edges(), k)


def test_wiener_path_hits_eq1_only_at_paths():
    # equality case of the order-only bound is the path
    for n in range(2, 9):
        assert Fraction(steiner_wiener(path_graph(n), 2)) == wiener_upper(n)
        if n >= 4:
            assert Fraction(steiner_wiener(cycle_graph(n), 2)) < wiener_upper(n)


def test_pair_bound_is_k2_special_case():
    for n in range(2, 30):
        assert sw_upper(n, 2) == wiener_upper(n)


def test_triangle_free_bound_on_random_bipartite():
    rng = random.Random(67)
    for _ in range(30):
        n = rng.randint(3, 8)
        g = random_connected_bipartite(n, rng)
        k = rng.randint(2, min(n, 4))
        assert check(g, "theorem5", k).passed
        assert check(g, "corollary2", k).passed
