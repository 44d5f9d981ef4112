"""Verification batteries: exhaustive bound checks over isomorphism classes,
a labeled cross-check that guards the enumerator, exact identity grids, and
the longest-path endpoint/ratio claims. Every check is integer or rational
with zero tolerance."""

from __future__ import annotations

from fractions import Fraction

from .bounds import check_theorem
from .cliques import binom, contribution_upper_bound
from .graphs import (
    ENUMERATION_LIMIT,
    Graph,
    ResourceLimitError,
    canonical_mask,
    enumerate_graphs,
    from_pair_mask,
    to_pair_mask,
    write_graph6,
)
from .weights import compute_weights


def _verdict_tuple(g: Graph, s_max: int) -> tuple:
    w = compute_weights(g)
    out = []
    for s in range(1, s_max + 1):
        for theorem in (1, 2):
            rep = check_theorem(g, s, theorem, w)
            out.append((rep.equality, rep.extremal, rep.gap >= 0 or not rep.in_scope))
    return tuple(out)


def exhaustive_verify(n_max: int, s_max: int) -> dict:
    """Both bounds, inequality and equality-iff-predicate, over every
    isomorphism class with 1..n_max vertices and every s <= s_max.

    Any violation is reported with its graph6 witness. The lone degenerate
    input (cycle form, s=1, single vertex) is counted separately, not as a
    violation.
    """
    if n_max > ENUMERATION_LIMIT:
        raise ResourceLimitError(f"exhaustive sweep capped at n <= {ENUMERATION_LIMIT}")
    violations: list[dict] = []
    counts: dict[int, int] = {}
    equalities: dict[str, int] = {}
    degenerate = 0
    for n in range(1, n_max + 1):
        counts[n] = 0
        for g in enumerate_graphs(n):
            counts[n] += 1
            w = compute_weights(g)
            for s in range(1, s_max + 1):
                for theorem in (1, 2):
                    rep = check_theorem(g, s, theorem, w)
                    if not rep.in_scope:
                        degenerate += 1
                        continue
                    if rep.gap < 0:
                        violations.append(
                            {"kind": "inequality", "graph6": rep.graph6, "n": n,
                             "s": s, "theorem": theorem, "gap": str(rep.gap)}
                        )
                    if not rep.consistent:
                        violations.append(
                            {"kind": "consistency", "graph6": rep.graph6, "n": n,
                             "s": s, "theorem": theorem, "equality": rep.equality,
                             "extremal": rep.extremal}
                        )
                    if rep.equality:
                        key = f"n={n},s={s},thm={theorem}"
                        equalities[key] = equalities.get(key, 0) + 1
    return {
        "n_max": n_max,
        "s_max": s_max,
        "graphs": counts,
        "graphs_total": sum(counts.values()),
        "equalities": equalities,
        "degenerate_cases": degenerate,
        "violations": violations,
        "ok": not violations,
    }


def labeled_crosscheck(n: int, s_max: int = 5) -> dict:
    """Run the same verdicts over all labeled n-vertex graphs with no
    isomorphism filtering, and force agreement with the canonical run.

    Guards the enumerator two ways: the canonical forms of all labeled graphs
    must be exactly the representative set, and each labeled graph's verdict
    tuple must equal its representative's.
    """
    if n > 5:
        raise ResourceLimitError(f"labeled sweep capped at n <= 5, got {n}")
    rep_masks = set()
    rep_verdicts: dict[int, tuple] = {}
    for g in enumerate_graphs(n):
        mask = to_pair_mask(g)
        rep_masks.add(mask)
        rep_verdicts[mask] = _verdict_tuple(g, s_max)
    violations: list[dict] = []
    mismatches: list[dict] = []
    seen_canon = set()
    total = 1 << (n * (n - 1) // 2)
    for mask in range(total):
        g = from_pair_mask(n, mask)
        canon = canonical_mask(g)
        seen_canon.add(canon)
        if canon not in rep_verdicts:
            mismatches.append({"kind": "missing_representative", "mask": mask, "canon": canon})
            continue
        verdict = _verdict_tuple(g, s_max)
        if verdict != rep_verdicts[canon]:
            mismatches.append({"kind": "verdict_disagreement", "graph6": write_graph6(g)})
        if any(not ineq for _, _, ineq in verdict):
            violations.append({"kind": "inequality", "graph6": write_graph6(g)})
        if any(eq != ex for eq, ex, _ in verdict):
            violations.append({"kind": "consistency", "graph6": write_graph6(g)})
    if seen_canon != rep_masks:
        mismatches.append(
            {"kind": "class_set_mismatch",
             "only_labeled": sorted(seen_canon - rep_masks),
             "only_reps": sorted(rep_masks - seen_canon)}
        )
    return {
        "n": n,
        "labeled_total": total,
        "classes": len(rep_masks),
        "violations": violations,
        "canonicalizer_mismatches": mismatches,
        "ok": not violations and not mismatches,
    }


def identity_grid(
    d_max: int = 12,
    conv_s_max: int = 8,
    shift_x_max: int = 40,
    shift_y_max: int = 12,
    mono_x_max: int = 40,
    merge_max: int = 15,
    merge_s_max: int = 8,
) -> dict:
    """Exact grids for the four standalone facts the bound proofs lean on.

    convolution      sum form of the contribution cap equals its closed form
    binomial_shift   C(x-2,y)/(x-3) <= C(x-1,y)/(x-1) for x>=4, y>=3, with
                     equality exactly when x-1 < y, and equality always at y=2
    monotonicity     C(x,s)/(x-1) non-decreasing in integer x >= 2
    merge_bound      (C(d+1,s)-C(a,s))/(d-a+1) <= C(a+d,s)/(a+d-1) for
                     d >= a >= 1, s >= 3; equality exactly at a=1 or on
                     all-zero cells, and identically at s=2
    """
    failures: list[dict] = []
    cells = 0

    for d in range(d_max + 1):
        for a in range(d + 1):
            for s in range(1, conv_s_max + 1):
                cells += 1
                try:
                    contribution_upper_bound(d, a, s)
                except AssertionError as exc:
                    failures.append({"check": "convolution", "d": d, "s_size": a,
                                     "s": s, "detail": str(exc)})

    for x in range(4, shift_x_max + 1):
        for y in range(2, shift_y_max + 1):
            cells += 1
            lhs = Fraction(binom(x - 2, y), x - 3)
            rhs = Fraction(binom(x - 1, y), x - 1)
            if lhs > rhs:
                failures.append({"check": "binomial_shift", "x": x, "y": y})
            if y == 2:
                if lhs != rhs:
                    failures.append({"check": "binomial_shift_eq_y2", "x": x})
            elif (lhs == rhs) != (x - 1 < y):
                failures.append({"check": "binomial_shift_eq", "x": x, "y": y})

    for s in range(2, conv_s_max + 1):
        for x in range(2, mono_x_max):
            cells += 1
            if Fraction(binom(x, s), x - 1) > Fraction(binom(x + 1, s), x):
                failures.append({"check": "monotonicity", "x": x, "s": s})

    def merge_sides(d: int, a: int, s: int) -> tuple[Fraction, Fraction]:
        lhs = Fraction(binom(d + 1, s) - binom(a, s), d - a + 1)
        rhs = Fraction(binom(a + d, s), a + d - 1)
        return lhs, rhs

    for d in range(1, merge_max + 1):
        for a in range(1, d + 1):
            for s in range(3, merge_s_max + 1):
                cells += 1
                lhs, rhs = merge_sides(d, a, s)
                if lhs > rhs:
                    failures.append({"check": "merge_bound", "d": d, "a": a, "s": s})
                expect_eq = a == 1 or rhs == 0
                if (lhs == rhs) != expect_eq:
                    failures.append({"check": "merge_bound_eq", "d": d, "a": a, "s": s})
            cells += 1
            lhs2, rhs2 = merge_sides(d, a, 2)
            if lhs2 != rhs2:
                failures.append({"check": "merge_bound_s2", "d": d, "a": a})

    return {"cells": cells, "failures": failures, "ok": not failures}


def _all_paths_of_length(g: Graph, k: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def extend(path: list[int], used: int):
        if len(path) == k + 1:
            out.append(tuple(path))
            return
        for w in g.neighbors(path[-1]):
            if not used >> w & 1:
                path.append(w)
                extend(path, used | (1 << w))
                path.pop()

    for v in range(g.n):
        extend([v], 1 << v)
    return out


def path_proof_claims(n_max: int, s_max: int = 8, k_max: int = 40) -> dict:
    """Two facts behind the path-form bound.

    endpoint_degree: in a connected graph whose longest path length k is not
    matched by a (k+1)-cycle, every longest path with non-adjacent endpoints
    has an endpoint of degree at most floor(k/2).
    ratio_chain: s < 2^(s-1) < prod_{x=0}^{s-2} (k-x)/(floor(k/2)-x) for
    s in [3, s_max], k in [2s, k_max], exactly in rationals.
    """
    if n_max > ENUMERATION_LIMIT:
        raise ResourceLimitError(f"claim sweep capped at n <= {ENUMERATION_LIMIT}")
    failures: list[dict] = []
    graphs_checked = 0
    paths_checked = 0
    for n in range(1, n_max + 1):
        for g in enumerate_graphs(n, connected_only=True):
            w = compute_weights(g)
            k = max(w.p)
            if k == 0:
                continue
            has_long_cycle = w.circumference >= 3 and w.circumference == k + 1
            if has_long_cycle:
                continue
            graphs_checked += 1
            for path in _all_paths_of_length(g, k):
                a, b = path[0], path[-1]
                if g.has_edge(a, b):
                    continue
                paths_checked += 1
                if min(g.degree(a), g.degree(b)) > k // 2:
                    failures.append(
                        {"check": "endpoint_degree", "graph6": write_graph6(g),
                         "path": path, "k": k,
                         "degrees": (g.degree(a), g.degree(b))}
                    )
    chain_cells = 0
    for s in range(3, s_max + 1):
        for k in range(2 * s, k_max + 1):
            chain_cells += 1
            half = k // 2
            prod = Fraction(1)
            for x in range(s - 1):
                prod *= Fraction(k - x, half - x)
            if not s < 2 ** (s - 1) < prod:
                failures.append({"check": "ratio_chain", "s": s, "k": k, "prod": str(prod)})
    return {
        "graphs_checked": graphs_checked,
        "longest_paths_checked": paths_checked,
        "chain_cells": chain_cells,
        "failures": failures,
        "ok": not failures,
    }
