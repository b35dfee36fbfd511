import random

import pytest

from swindex import (
    Graph,
    PreconditionError,
    WeightFn,
    as_weights,
    parse_weight_file,
    path_graph,
    steiner_wiener,
    steiner_wiener_weighted,
    steiner_wiener_weighted_naive,
    steiner_wiener_weighted_tree,
)

from ensembles import random_connected_graph, random_tree, random_weights


def test_weight_fn_basics():
    w = WeightFn.from_pairs(4, [(0, 2), (3, 1)])
    assert w.values() == (2, 0, 0, 1)
    assert w.total == 3
    assert w.support() == (0, 3)
    assert w.weight_of([0, 1, 3]) == 3
    assert as_weights(1, 3) == WeightFn.uniform(3)
    assert as_weights([1, 2, 0], 3).values() == (1, 2, 0)
    with pytest.raises(PreconditionError):
        WeightFn([1, -1])
    with pytest.raises(PreconditionError):
        WeightFn.from_pairs(3, [(0, 1), (0, 2)])
    with pytest.raises(PreconditionError):
        as_weights([1, 2], 3)


def test_parse_weight_file():
    w = parse_weight_file("0 2\n2 1\n", 3)
    assert w.values() == (2, 0, 1)
    for bad in ("0 2\n0 1\n", "5 1\n", "0 -1\n", "0\n", "0 x\n"):
        with pytest.raises(Exception):
            parse_weight_file(bad, 3)


def test_weighted_examples():
    # single edge, weights (2, 1): copy pairs {a,a'} cost 0, {a,b} twice
    edge = path_graph(2)
    assert steiner_wiener_weighted_naive(edge, [2, 1], 2) == 2
    assert steiner_wiener_weighted(edge, [2, 1], 2) == 2
    # weight-0 middle vertex still carries distance
    p3 = path_graph(3)
    assert steiner_wiener_weighted_naive(p3, [1, 0, 1], 2) == 2
    assert steiner_wiener_weighted(p3, [1, 0, 1], 2) == 2
    assert steiner_wiener_weighted_naive(p3, [2, 1, 1], 2) == 7
    assert steiner_wiener_weighted(p3, [2, 1, 1], 2) == 7
    # all copies on one vertex: every subset has a single original
    assert steiner_wiener_weighted(path_graph(2), [3, 0], 2) == 0


def test_unit_weights_reduce_to_unweighted():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(2, 7)
        g = random_connected_graph(n, rng)
        k = rng.randint(1, n)
        assert steiner_wiener_weighted(g, 1, k) == steiner_wiener(g, k)


def test_grouped_matches_naive():
    rng = random.Random(37)
    checked = 0
    while checked < 40:
        n = rng.randint(2, 7)
        g = random_connected_graph(n, rng)
        w = random_weights(n, rng, lo=0, hi=3)
        if w.total < 2:
            continue
        k = rng.randint(2, min(w.total, 4))
        assert steiner_wiener_weighted(g, w, k) == steiner_wiener_weighted_naive(
            g, w, k
        )
        checked += 1


def test_tree_fast_path_matches_grouped():
    rng = random.Random(41)
    checked = 0
    while checked < 40:
        n = rng.randint(2, 10)
        t = random_tree(n, rng)
        w = random_weights(n, rng, lo=0, hi=3)
        if w.total < 2:
            continue
        k = rng.randint(2, min(w.total, 5))
        assert steiner_wiener_weighted_tree(t, w, k) == steiner_wiener_weighted(
            t, w, k
        )
        checked += 1


def test_weighted_validates():
    with pytest.raises(PreconditionError):
        steiner_wiener_weighted(path_graph(3), [1, 1, 1], 4)  # k above total
    with pytest.raises(PreconditionError):
        steiner_wiener_weighted_tree(Graph.from_edges(2, []), [1, 1], 1)
