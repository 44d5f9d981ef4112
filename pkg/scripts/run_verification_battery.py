#!/usr/bin/env python3
"""Run the full verification battery and print a sectioned report.

Usage: python scripts/run_verification_battery.py [--n-max N] [--s-max S] [--quick]

Sections:
  1. exhaustive bound verification over isomorphism classes
  2. labeled cross-check of the enumerator (n = 5)
  3. rotation-closure lemmas and peeling decomposition
  4. identity grids (convolution, shift, monotonicity, merge bound)
  5. classical-bound dominance
  6. longest-path endpoint and ratio-chain claims
Exit code 0 when every section is clean, 1 otherwise.
"""

import argparse
import random
import sys
import time

from cliquebounds import (
    compute_weights,
    enumerate_graphs,
    exhaustive_verify,
    identity_grid,
    is_connected,
    labeled_crosscheck,
    longest_path_from,
    luo_dominance,
    path_proof_claims,
    peel,
    random_graph,
    transform_closure,
    verify_closure_lemmas,
    verify_peel_decomposition,
    write_graph6,
)


def banner(title):
    print("\n" + "=" * 72)
    print(f"  {title}")
    print("=" * 72)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--s-max", type=int, default=5)
    parser.add_argument("--quick", action="store_true", help="n-max 5 and 100 random graphs")
    parser.add_argument("--random-graphs", type=int, default=500)
    parser.add_argument("--seed", type=int, default=424242)
    args = parser.parse_args()
    if args.quick:
        args.n_max = min(args.n_max, 5)
        args.random_graphs = min(args.random_graphs, 100)

    t_start = time.time()
    all_ok = True

    banner(f"1. Exhaustive bound verification, n <= {args.n_max}, s <= {args.s_max}")
    t0 = time.time()
    summary = exhaustive_verify(args.n_max, args.s_max)
    all_ok &= summary["ok"]
    print(f"  graphs: {summary['graphs_total']}  violations: {len(summary['violations'])}"
          f"  degenerate: {summary['degenerate_cases']}  [{time.time()-t0:.1f}s]")
    per_n = summary["graphs"]
    print("  classes per n:", " ".join(f"{n}:{per_n[n]}" for n in sorted(per_n)))
    for v in summary["violations"][:5]:
        print("  VIOLATION:", v)

    banner("2. Labeled cross-check of the enumerator (n = 5)")
    t0 = time.time()
    lc = labeled_crosscheck(5)
    all_ok &= lc["ok"]
    print(f"  labeled graphs: {lc['labeled_total']}  classes: {lc['classes']}"
          f"  mismatches: {len(lc['canonicalizer_mismatches'])}  [{time.time()-t0:.1f}s]")

    banner("3. Rotation-closure lemmas and peeling decomposition")
    t0 = time.time()
    fails = []
    checked = 0

    def check(g):
        w = compute_weights(g)
        u = min(v for v in range(g.n) if w.c[v] == w.circumference)
        tc = transform_closure(g, longest_path_from(g, u), weights=w)
        if not verify_closure_lemmas(g, tc, w)["ok"]:
            return False
        trace = peel(g, u)
        return all(verify_peel_decomposition(g, trace, s)["ok"] for s in (2, 3, 4))

    for n in range(1, args.n_max + 1):
        for g in enumerate_graphs(n):
            checked += 1
            if not check(g):
                fails.append(write_graph6(g))
    rng = random.Random(args.seed)
    rand_done = 0
    while rand_done < args.random_graphs:
        g = random_graph(rng.randint(4, 10), rng.uniform(0.2, 0.55), rng.randrange(1 << 30))
        if not is_connected(g):
            continue
        rand_done += 1
        checked += 1
        if not check(g):
            fails.append(write_graph6(g))
    all_ok &= not fails
    print(f"  graphs checked: {checked} ({rand_done} random)  failures: {len(fails)}"
          f"  [{time.time()-t0:.1f}s]")
    for w6 in fails[:5]:
        print("  FAILURE:", w6)

    banner("4. Identity grids")
    t0 = time.time()
    grid = identity_grid()
    all_ok &= grid["ok"]
    print(f"  cells: {grid['cells']}  failures: {len(grid['failures'])}  [{time.time()-t0:.1f}s]")

    banner("5. Classical-bound dominance")
    t0 = time.time()
    dom_fails = 0
    for n in range(1, args.n_max + 1):
        for g in enumerate_graphs(n):
            w = compute_weights(g)
            for s in (2, 3, 4):
                rep = luo_dominance(g, s, w)
                if w.circumference >= 3 and not rep["cycle"]["ok"]:
                    dom_fails += 1
                if not rep["path"]["ok"]:
                    dom_fails += 1
    all_ok &= dom_fails == 0
    print(f"  violations: {dom_fails}  [{time.time()-t0:.1f}s]")

    banner("6. Longest-path endpoint and ratio-chain claims")
    t0 = time.time()
    pc = path_proof_claims(args.n_max)
    all_ok &= pc["ok"]
    print(f"  graphs: {pc['graphs_checked']}  longest paths: {pc['longest_paths_checked']}"
          f"  chain cells: {pc['chain_cells']}  failures: {len(pc['failures'])}"
          f"  [{time.time()-t0:.1f}s]")

    banner("SUMMARY")
    print(f"  {'ALL SECTIONS CLEAN' if all_ok else '*** FAILURES DETECTED ***'}"
          f"  (total {time.time()-t_start:.1f}s)")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
