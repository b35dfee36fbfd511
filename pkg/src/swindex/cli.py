"""Command line front end.

Exact values (integers, fractions like ``5/3``) go to stdout; notes and
error messages go to stderr. Exit codes: 0 success, 2 usage or input-format
problems (including bad family parameters), 3 violated computation
preconditions, 4 a checked bound or certificate condition that fails.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

from .bounds import BOUND_IDS, applicable, bound_rhs, check
from .construct import (
    certificate_to_json,
    matching_spanning_tree,
    packing_spanning_tree,
    verify_certificate,
)
from .errors import GraphFormatError, PreconditionError
from .families import (
    classic,
    min_degree_extremal,
    sweep_csv,
    tightness_sweep,
    triangle_free_extremal,
)
from .graph import Graph, format_edge_list, is_tree, parse_edge_list
from .steiner import (
    avg_steiner_distance,
    steiner_wiener,
    steiner_wiener_weighted,
    steiner_wiener_weighted_tree,
)
from .weights import WeightFn, parse_weight_file

CLASSIC_FAMILIES = ("path", "cycle", "star", "complete", "complete_bipartite")
LAYERED_FAMILIES = ("G", "H")


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _family_graph(args) -> Graph:
    fam = args.family
    if fam in LAYERED_FAMILIES:
        if args.d is None or args.delta is None:
            raise PreconditionError(f"family {fam} needs --d and --delta")
        build = min_degree_extremal if fam == "G" else triangle_free_extremal
        return build(args.d, args.delta)
    if args.size is None:
        raise PreconditionError(f"family {fam} needs --size")
    return classic(fam, args.size, args.size2)


def _load_graph(args) -> Graph:
    """Input phase: file parsing and family construction. Callers map any
    error here to exit code 2."""
    if getattr(args, "graph", None):
        return parse_edge_list(Path(args.graph).read_text())
    return _family_graph(args)


def _add_graph_source(sub, require: bool = True) -> None:
    group = sub.add_mutually_exclusive_group(required=require)
    group.add_argument("--graph", metavar="FILE", help="edge-list file ('n m' header)")
    group.add_argument(
        "--family",
        choices=CLASSIC_FAMILIES + LAYERED_FAMILIES,
        help="generate the graph instead of reading a file",
    )
    sub.add_argument("--size", type=int, help="size for classic families")
    sub.add_argument("--size2", type=int, help="second size (complete_bipartite)")
    sub.add_argument("--d", type=int, help="diameter for layered families")
    sub.add_argument("--delta", type=int, help="degree parameter for layered families")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swindex",
        description="exact subset-distance indices, tree constructions, and bound checks",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("compute", help="index or average distance of a graph")
    _add_graph_source(p)
    p.add_argument("--k", type=int, default=2, help="subset size (default 2)")
    p.add_argument(
        "--metric",
        choices=("sw", "mu"),
        default="sw",
        help="sw: subset-distance total; mu: its average (default sw)",
    )
    wgroup = p.add_mutually_exclusive_group()
    wgroup.add_argument("--weights", metavar="FILE", help="per-vertex weight file ('v w' lines)")
    wgroup.add_argument("--uniform-weight", type=int, help="same weight on every vertex")
    p.set_defaults(func=cmd_compute)

    p = subs.add_parser("bound", help="evaluate a bound's right-hand side")
    p.add_argument("--which", required=True, choices=BOUND_IDS)
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--delta", type=int, help="minimum degree")
    p.add_argument("--k", type=int, help="subset size")
    p.add_argument("--N", type=int, help="total weight (weighted tree bound)")
    p.add_argument("--C", type=int, help="minimum weight (weighted tree bound)")
    p.set_defaults(func=cmd_bound)

    p = subs.add_parser("construct", help="build a spanning tree with a certificate")
    p.add_argument("--graph", metavar="FILE", required=True)
    p.add_argument("--method", required=True, choices=("packing", "matching"))
    p.add_argument("--start", type=int, default=0, help="first anchor (packing)")
    p.add_argument(
        "--start-edge", type=int, nargs=2, metavar=("U", "V"), help="first edge (matching)"
    )
    p.add_argument("--k", type=int, default=2, help="subset size for the index check")
    p.add_argument("--out", metavar="FILE", help="write the certificate JSON here")
    p.set_defaults(func=cmd_construct)

    p = subs.add_parser("generate", help="emit a family graph as an edge list")
    _add_graph_source(p, require=False)
    p.add_argument("--out", metavar="FILE", help="write here instead of stdout")
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("verify", help="check stated bounds against a graph")
    p.add_argument("--graph", metavar="FILE", required=True)
    p.add_argument("--k", type=int, default=2, help="subset size (default 2)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="check every applicable bound")
    group.add_argument("--which", choices=BOUND_IDS, help="check one bound")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("sweep", help="index-to-bound ratios across diameters")
    p.add_argument("--family", required=True, choices=LAYERED_FAMILIES)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--out", metavar="FILE", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_sweep)

    return parser


def cmd_compute(args) -> int:
    try:
        g = _load_graph(args)
        weights = None
        if args.weights is not None:
            weights = parse_weight_file(Path(args.weights).read_text(), g.n)
        elif args.uniform_weight is not None:
            if args.uniform_weight < 0:
                raise GraphFormatError("uniform weight must be non-negative")
            weights = WeightFn.uniform(g.n, args.uniform_weight)
    except (OSError, PreconditionError, GraphFormatError) as exc:
        _err(str(exc))
        return 2
    if weights is None:
        if args.metric == "sw":
            print(steiner_wiener(g, args.k))
        else:
            print(avg_steiner_distance(g, args.k))
        return 0
    if is_tree(g):
        sw = steiner_wiener_weighted_tree(g, weights, args.k)
    else:
        sw = steiner_wiener_weighted(g, weights, args.k)
    if args.metric == "sw":
        print(sw)
        return 0
    total = weights.total
    if total < args.k:
        raise PreconditionError(f"total weight {total} is below k={args.k}")
    print(Fraction(sw, comb(total, args.k)))
    return 0


def cmd_bound(args) -> int:
    params = {
        key: getattr(args, key)
        for key in ("n", "delta", "k", "N", "C")
        if getattr(args, key) is not None
    }
    try:
        print(bound_rhs(args.which, **params))
    except PreconditionError as exc:
        _err(str(exc))
        return 2
    return 0


def cmd_construct(args) -> int:
    try:
        g = parse_edge_list(Path(args.graph).read_text())
    except (OSError, GraphFormatError) as exc:
        _err(str(exc))
        return 2
    if args.method == "packing":
        cert = packing_spanning_tree(g, start=args.start)
        anchors = " ".join(str(a) for a in cert.anchors)
    else:
        start_edge = tuple(args.start_edge) if args.start_edge else None
        cert = matching_spanning_tree(g, start_edge=start_edge)
        anchors = " ".join(f"{u}-{v}" for u, v in cert.anchors)
    print(f"anchors {anchors}")
    reports = verify_certificate(cert, g, k=args.k)
    for rep in reports:
        print(rep)
    if args.out:
        Path(args.out).write_text(certificate_to_json(cert) + "\n")
    if all(rep.passed for rep in reports):
        print("result PASS")
        return 0
    print("result FAIL")
    return 4


def cmd_generate(args) -> int:
    if not getattr(args, "family", None):
        _err("generate needs --family")
        return 2
    try:
        g = _family_graph(args)
    except PreconditionError as exc:
        _err(str(exc))
        return 2
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    try:
        g = parse_edge_list(Path(args.graph).read_text())
    except (OSError, GraphFormatError) as exc:
        _err(str(exc))
        return 2
    which = [args.which] if args.which else list(BOUND_IDS)
    failed = False
    for name in which:
        ok, reason = applicable(g, name, args.k)
        if not ok:
            print(f"skip {name}: {reason}", file=sys.stderr)
            continue
        rep = check(g, name, args.k)
        print(rep)
        if not rep.passed:
            failed = True
    return 4 if failed else 0


def cmd_sweep(args) -> int:
    if args.family == "G":
        if args.delta < 2 or (args.delta + 1) % 3 != 0:
            _err("family G needs delta >= 2 with delta + 1 divisible by 3")
            return 2
        d_floor = 1
    else:
        if args.delta < 2 or args.delta % 2 != 0:
            _err("family H needs an even delta >= 2")
            return 2
        d_floor = 3
    if args.d_min < d_floor or args.d_max < args.d_min:
        _err(f"need {d_floor} <= d-min <= d-max")
        return 2
    if args.k < 2:
        _err("sweep needs k >= 2")
        return 2
    rows = tightness_sweep(
        args.family, args.delta, args.k, range(args.d_min, args.d_max + 1)
    )
    text = sweep_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    for row in rows:
        if row.has_triangle:
            print(f"note: d={row.d} contains triangles", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (0, None):
            return 0
        return 2
    try:
        return args.func(args)
    except GraphFormatError as exc:
        _err(str(exc))
        return 2
    except PreconditionError as exc:
        _err(str(exc))
        return 3


if __name__ == "__main__":
    sys.exit(main())
