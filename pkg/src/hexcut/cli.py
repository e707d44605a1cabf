"""Command-line interface.

Subcommands: graph, facets, order, verify, spanning, formulas, euler,
homology, explore.  Exit codes: 0 pass, 1 mathematical check failed,
2 usage error, 3 resource guard.  All outputs are deterministic: equal
inputs produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from . import __version__
from .cutcomplex import (
    enumerate_facets,
    facets_to_csv,
    facets_to_json_dict,
    hex_facet_count,
    induced_p3_count,
)
from .errors import HexCutError, InvalidParams, ResourceGuard, SizeLimitExceeded
from .hexgraph import (
    build_hex_graph,
    graph_to_dot,
    graph_to_edge_text,
    graph_to_json_dict,
    validate_structure,
)
from .homology import (
    HOMOLOGY_VERTEX_LIMIT,
    betti_numbers,
    reduced_euler_closed,
    wedge_check,
    wedge_verdict_to_json_dict,
)
from .shelling import (
    PAIR_GUARD,
    non_spanning_pair_table,
    order_to_json_dict,
    shelling_order,
    spanning_count_formula,
    spanning_facets,
    spanning_report_to_csv,
    spanning_report_to_json_dict,
    tail_facet_count,
    verify_k_cut_order,
    verify_shelling,
)

FACET_SUBSET_GUARD = 20_000

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _default_jobs() -> int:
    env = os.environ.get("HEXCUT_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _envelope(args, payload: dict) -> dict:
    out = {
        "m": getattr(args, "m", None),
        "n": getattr(args, "n", None),
        "k": getattr(args, "k", 3),
        "tool_version": __version__,
    }
    out.update(payload)
    return out


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: dict) -> None:
    _emit(args, json.dumps(_envelope(args, payload), indent=2) + "\n")


def _check_mn(args) -> None:
    if args.m < 1 or args.n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={args.m}, n={args.n}")


def _add_common(p, with_k=False) -> None:
    p.add_argument("--m", type=int, required=True, help="hexagon columns")
    p.add_argument("--n", type=int, required=True, help="hexagon rows")
    if with_k:
        p.add_argument("--k", type=int, default=3, help="cut size (default 3)")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--force", action="store_true", help="override resource guards")


def cmd_graph(args) -> int:
    _check_mn(args)
    g = build_hex_graph(args.m, args.n, validate=False)
    report = validate_structure(g)
    if args.format == "edges":
        _emit(args, graph_to_edge_text(g))
    elif args.format == "dot":
        _emit(args, graph_to_dot(g))
    else:
        _emit_json(args, graph_to_json_dict(g))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_facets(args) -> int:
    _check_mn(args)
    g = build_hex_graph(args.m, args.n)
    n_subsets = comb(g.n_vertices, args.k)
    if n_subsets > FACET_SUBSET_GUARD and not args.force:
        raise ResourceGuard(
            f"{n_subsets} candidate subsets exceed guard {FACET_SUBSET_GUARD}; use --force"
        )
    cx = enumerate_facets(g, args.k)
    if args.format == "csv":
        _emit(args, facets_to_csv(cx))
    else:
        _emit_json(args, facets_to_json_dict(cx))
    return EXIT_OK


def _build_order(args):
    g = build_hex_graph(args.m, args.n)
    cx = enumerate_facets(g, 3)
    eta = cx.n_facets
    pairs = eta * (eta - 1) // 2
    if pairs > PAIR_GUARD and not args.force:
        raise ResourceGuard(
            f"{eta} facets imply {pairs} ordered pairs > guard {PAIR_GUARD}; use --force"
        )
    relocate = not getattr(args, "no_relocate_t", False)
    return shelling_order(cx, relocate_tail=relocate)


def cmd_order(args) -> int:
    _check_mn(args)
    n_subsets = comb(2 * args.m + 2 * args.n + 2 * args.m * args.n, 3)
    if n_subsets > FACET_SUBSET_GUARD and not args.force:
        raise ResourceGuard(
            f"{n_subsets} candidate subsets exceed guard {FACET_SUBSET_GUARD}; use --force"
        )
    g = build_hex_graph(args.m, args.n)
    cx = enumerate_facets(g, 3)
    order = shelling_order(cx, relocate_tail=not args.no_relocate_t)
    _emit_json(args, order_to_json_dict(order))
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_mn(args)
    order = _build_order(args)
    res = verify_shelling(order, strategy=args.strategy, jobs=args.jobs)
    payload = {
        "ok": res.ok,
        "counterexample": list(res.counterexample) if res.counterexample else None,
        "n_facets": order.n_facets,
        "pairs_checked": res.pairs_checked,
        "strategy": res.strategy,
        "relocated_tail": not args.no_relocate_t,
    }
    _emit_json(args, payload)
    return EXIT_OK if res.ok else EXIT_CHECK_FAILED


def cmd_spanning(args) -> int:
    _check_mn(args)
    order = _build_order(args)
    res = verify_shelling(order, strategy=args.strategy, jobs=args.jobs)
    if not res.ok:
        _emit_json(args, {"ok": False, "counterexample": list(res.counterexample)})
        return EXIT_CHECK_FAILED
    report = spanning_facets(order)
    expected = spanning_count_formula(args.m, args.n)
    computed_pairs = set(report.non_spanning_pairs)
    table_pairs = {(x, y) for x, y, _ in non_spanning_pair_table(args.m, args.n)}
    diff = {
        "only_computed": sorted(computed_pairs - table_pairs),
        "only_table": sorted(table_pairs - computed_pairs),
    }
    payload = spanning_report_to_json_dict(report)
    payload["psi_formula"] = expected
    payload["psi_matches_formula"] = report.psi == expected
    payload["table_matches"] = not diff["only_computed"] and not diff["only_table"]
    payload["table_diff"] = {
        "only_computed": [list(p) for p in diff["only_computed"]],
        "only_table": [list(p) for p in diff["only_table"]],
    }
    if args.format == "csv":
        _emit(args, spanning_report_to_csv(report))
    else:
        _emit_json(args, payload)
    # the computed spanning count is the ground truth; a table diff alone
    # is reported but does not fail the run
    return EXIT_OK if report.psi == expected else EXIT_CHECK_FAILED


def cmd_formulas(args) -> int:
    _check_mn(args)
    m, n = args.m, args.n
    N = 2 * m + 2 * n + 2 * m * n
    payload = {
        "vertices": N,
        "top_dimension": N - 4,
        "induced_p3": induced_p3_count(m, n),
        "facets": hex_facet_count(m, n),
        "tail_facets": tail_facet_count(m, n),
        "spanning": spanning_count_formula(m, n),
        "note": (
            "the eight non-spanning families sum to 6mn+2m+2n-4 "
            "(= (6m+2)n + (2m-4)); the alternative total 6mn+2m+2n-6 "
            "is inconsistent with that sum"
        ),
    }
    if args.format == "text":
        lines = [
            f"vertices       {payload['vertices']}",
            f"top_dimension  {payload['top_dimension']}",
            f"induced_p3     {payload['induced_p3']}",
            f"facets         {payload['facets']}",
            f"tail_facets    {payload['tail_facets']}",
            f"spanning       {payload['spanning']}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, payload)
    return EXIT_OK


def cmd_euler(args) -> int:
    _check_mn(args)
    value = reduced_euler_closed(args.m, args.n)
    expected = spanning_count_formula(args.m, args.n)
    if args.format == "text":
        _emit(args, f"{value}\n")
    else:
        _emit_json(args, {"reduced_euler": value, "psi_formula": expected,
                          "matches": value == expected})
    return EXIT_OK if value == expected else EXIT_CHECK_FAILED


def cmd_homology(args) -> int:
    _check_mn(args)
    if args.wedge:
        verdict = wedge_check(
            args.m, args.n, force=args.force, jobs=args.jobs,
        )
        _emit_json(args, wedge_verdict_to_json_dict(verdict))
        return EXIT_OK if verdict.all_ran_pass else EXIT_CHECK_FAILED
    g = build_hex_graph(args.m, args.n)
    if g.n_vertices > HOMOLOGY_VERTEX_LIMIT and not args.force:
        raise ResourceGuard(
            f"N={g.n_vertices} exceeds homology limit {HOMOLOGY_VERTEX_LIMIT}; use --force"
        )
    cx = enumerate_facets(g, 3)
    bv = betti_numbers(cx, limit=HOMOLOGY_VERTEX_LIMIT, force=args.force)
    payload = {
        "betti": {str(dim): bv.b(dim) for dim in range(-1, bv.dim + 1)},
        "top_dimension": g.n_vertices - 4,
        "psi_formula": spanning_count_formula(args.m, args.n),
    }
    _emit_json(args, payload)
    return EXIT_OK


def cmd_explore(args) -> int:
    _check_mn(args)
    g = build_hex_graph(args.m, args.n)
    n_subsets = comb(g.n_vertices, args.k)
    if n_subsets > FACET_SUBSET_GUARD and not args.force:
        raise ResourceGuard(
            f"{n_subsets} candidate subsets exceed guard {FACET_SUBSET_GUARD}; use --force"
        )
    verdict = verify_k_cut_order(
        g, args.k, rule=args.rule, force=args.force,
        strategy=args.strategy, jobs=args.jobs,
    )
    payload = {
        "rule": verdict.rule,
        "n_facets": verdict.n_facets,
        "ok": verdict.ok,
        "counterexample": list(verdict.counterexample) if verdict.counterexample else None,
        "relocated": [list(t) for t in verdict.relocated],
    }
    _emit_json(args, payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexcut",
        description="hexagonal grid graphs, 3-cut complexes, shelling verification",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build and export the graph")
    _add_common(p)
    p.add_argument("--format", choices=["edges", "dot", "json"], default="edges")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("facets", help="enumerate facet complements")
    _add_common(p, with_k=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("order", help="export the candidate shelling order")
    _add_common(p)
    p.add_argument("--no-relocate-t", action="store_true",
                   help="keep tail facets at their sorted positions")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify", help="verify the shelling condition pairwise")
    _add_common(p)
    p.add_argument("--strategy", choices=["pairwise", "lambda-complement"],
                   default="pairwise")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--no-relocate-t", action="store_true",
                   help="keep tail facets at their sorted positions")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spanning", help="spanning facet report")
    _add_common(p)
    p.add_argument("--strategy", choices=["pairwise", "lambda-complement"],
                   default="pairwise")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--no-relocate-t", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_spanning)

    p = sub.add_parser("formulas", help="closed-form counts")
    _add_common(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("euler", help="reduced Euler characteristic (closed form)")
    _add_common(p)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("homology", help="reduced GF(2) Betti numbers")
    _add_common(p)
    p.add_argument("--wedge", action="store_true",
                   help="emit the aggregated sphere-wedge verdict instead")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("explore", help="mechanical k-cut order check, any k")
    _add_common(p, with_k=True)
    p.add_argument("--rule", choices=["revlex", "revlex-with-neighborhood-tail"],
                   default="revlex")
    p.add_argument("--strategy", choices=["pairwise", "lambda-complement"],
                   default="pairwise")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_explore)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ResourceGuard, SizeLimitExceeded) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvalidParams as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HexCutError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
