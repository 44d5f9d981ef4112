"""Command-line front end.

Subcommands: weights (TSV of per-vertex p and c), check (JSON-lines bound
reports), sweep (exhaustive verification summary), gen (extremal-family
generators), peel (stage trace plus decomposition verdict).

Exit codes: 0 all checks consistent, 1 mathematical inconsistency found,
2 usage, input, or resource error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import check_theorem
from .graphs import (
    BlockSpec,
    Graph,
    GraphParseError,
    ResourceLimitError,
    generate_pdbg,
    parse_edge_list,
    parse_graph6,
    random_clique_forest,
    write_graph6,
)
from .oracle import exhaustive_verify
from .transforms import ClosureBudgetError, peel, verify_peel_decomposition
from .weights import compute_weights, compute_weights_block_graph

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2


def _read_graphs(source: str) -> list[Graph]:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    stripped = text.strip()
    if not stripped:
        return []
    first = stripped.splitlines()[0].strip()
    if first.startswith("n ") or first == "n":
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in stripped.splitlines() if line.strip()]


def cmd_weights(args) -> int:
    for g in _read_graphs(args.input):
        w = compute_weights(g, dp_limit=args.dp_limit)
        for v in range(g.n):
            print(f"{v}\t{w.p[v]}\t{w.c[v]}")
        print(f"circumference\t{w.circumference}")
    return EXIT_OK


def cmd_check(args) -> int:
    status = EXIT_OK
    for g in _read_graphs(args.input):
        rep = check_theorem(g, args.s, args.theorem, dp_limit=args.dp_limit)
        print(rep.to_json())
        if rep.in_scope and (rep.gap < 0 or not rep.consistent):
            status = EXIT_INCONSISTENT
    return status


def cmd_sweep(args) -> int:
    summary = exhaustive_verify(args.n, args.s)
    print(json.dumps(summary))
    return EXIT_OK if summary["ok"] else EXIT_INCONSISTENT


def _parse_pdbg_spec(text: str) -> BlockSpec:
    try:
        orders = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad block spec {text!r}, expected comma-separated orders") from None
    return BlockSpec(orders)


def _parse_forest_params(text: str, seed: int | None) -> Graph:
    count_s, _, order_s = text.partition("x")
    try:
        count = int(count_s)
    except ValueError:
        raise ValueError(f"bad clique-forest params {text!r}") from None
    if "-" in order_s:
        lo_s, _, hi_s = order_s.partition("-")
        lo, hi = int(lo_s), int(hi_s)
        if seed is None:
            raise ValueError("random clique forest needs an explicit --seed")
        return random_clique_forest(count, lo, hi, seed)
    order = int(order_s)
    if seed is None:
        seed = 0
    return random_clique_forest(count, order, order, seed)


def cmd_gen(args) -> int:
    if args.pdbg:
        spec = _parse_pdbg_spec(args.pdbg)
        g = generate_pdbg(spec)
        theorem = 1
    else:
        g = _parse_forest_params(args.clique_forest, args.seed)
        theorem = 2
    print(write_graph6(g))
    if args.self_check:
        # generated families are block forests, so the structural weights
        # apply at any size the graph type allows
        w = compute_weights_block_graph(g)
        for s in (2, 3, 4):
            rep = check_theorem(g, s, theorem, w=w)
            if not rep.equality:
                print(
                    json.dumps({"self_check": "failed", "s": s, "gap": str(rep.gap)}),
                    file=sys.stderr,
                )
                return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_peel(args) -> int:
    status = EXIT_OK
    for g in _read_graphs(args.input):
        if g.n == 0:
            print(json.dumps({"stages": 0, "ok": True}))
            continue
        w = compute_weights(g, dp_limit=args.dp_limit)
        if args.start is not None:
            u = args.start
        else:
            u = min(v for v in range(g.n) if w.c[v] == w.circumference)
        trace = peel(g, u, dp_limit=args.dp_limit)
        if args.trace:
            for i, st in enumerate(trace.stages):
                print(
                    json.dumps(
                        {
                            "stage": i,
                            "graph6": write_graph6(st.graph),
                            "x": st.start,
                            "path": list(st.path),
                            "terminals": sorted(st.terminals),
                        }
                    )
                )
        verdicts = {s: verify_peel_decomposition(g, trace, s)["ok"] for s in (2, 3, 4)}
        ok = all(verdicts.values())
        print(json.dumps({"stages": len(trace.stages), "identity": verdicts, "ok": ok}))
        if not ok:
            status = EXIT_INCONSISTENT
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquebounds",
        description="Exact verification of vertex-localized clique-count bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="per-vertex longest-path/cycle weights as TSV")
    p.add_argument("input", nargs="?", default="-", help="graph6 lines or edge-list file; - for stdin")
    p.add_argument("--dp-limit", type=int, default=18)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("check", help="evaluate one localized bound per input graph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--dp-limit", type=int, default=18)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="exhaustive verification over isomorphism classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=5)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="emit extremal-family graphs as graph6")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pdbg", help="comma-separated block orders, path-shaped tree")
    group.add_argument("--clique-forest", help="COUNTxORDER or COUNTxLO-HI (random, needs --seed)")
    p.add_argument("--seed", type=int)
    p.add_argument("--self-check", action="store_true")
    p.add_argument("--dp-limit", type=int, default=18)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("peel", help="terminal-set peeling trace and split verdict")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--start", type=int)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--dp-limit", type=int, default=18)
    p.set_defaults(func=cmd_peel)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "s", None) is not None and args.command in ("check",) and args.s < 1:
        print("clique order must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (GraphParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, ClosureBudgetError) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
