"""Endpoint-rotation machinery for longest paths and the iterative peeling
decomposition built on it.

A rotation of a longest v0-path P = v0..vk along a chord (vj, vk), j <= k-2,
replaces the tail by v0..vj vk v(k-1)..v(j+1). Closing the set of paths
reachable by rotations yields the terminal set L, one representative path
per terminal, a pivot vertex per representative, and the outside-neighbor
sets S_v. Peeling repeatedly removes terminal sets and isolated vertices
until nothing is left, which splits every clique count across stages.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cliques import count_cliques, count_cliques_touching
from .graphs import Graph
from .weights import DEFAULT_DP_LIMIT, VertexWeights, compute_weights, longest_path_from

PathSeq = tuple[int, ...]

DEFAULT_CLOSURE_BUDGET = 1_000_000


class ClosureBudgetError(RuntimeError):
    """Rotation closure exceeded its path-state budget."""


def _require_path(g: Graph, path: PathSeq):
    if not path:
        raise ValueError("empty vertex sequence is not a path")
    if len(set(path)) != len(path):
        raise ValueError(f"repeated vertex in path {path}")
    for v in path:
        if not 0 <= v < g.n:
            raise ValueError(f"path vertex {v} not in graph")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"path step {a}-{b} is not an edge")


def simple_transforms(g: Graph, path: PathSeq) -> list[PathSeq]:
    """All single rotations of a longest start-anchored path.

    The terminal's neighborhood must lie on the path (anything else means the
    path was extendable, violating the caller's longest-path certificate).
    """
    _require_path(g, path)
    k = len(path) - 1
    terminal = path[k]
    on_path = set(path)
    for u in g.neighbors(terminal):
        if u not in on_path:
            raise ValueError(
                f"terminal {terminal} has neighbor {u} off the path; not a longest path"
            )
    out = []
    for j in range(k - 1):
        if g.has_edge(path[j], terminal):
            out.append(path[: j + 1] + tuple(reversed(path[j + 1 :])))
    return out


@dataclass(frozen=True)
class TransformClosure:
    """Everything the rotation closure of one base path produces.

    ``terminal_set`` never contains the start vertex. ``pivots[v]`` is the
    vertex c(v)-1 steps before v on v's representative, or None when the
    representative is shorter than that (not observed on any verified input).
    """

    start: int
    base: PathSeq
    paths: tuple[PathSeq, ...]
    terminal_set: frozenset[int]
    representatives: dict[int, PathSeq]
    pivots: dict[int, int | None]
    s_sets: dict[int, frozenset[int]]


def transform_closure(
    g: Graph,
    path: PathSeq,
    weights: VertexWeights | None = None,
    budget: int = DEFAULT_CLOSURE_BUDGET,
) -> TransformClosure:
    """Breadth-first closure of a longest v0-path under single rotations.

    Paths are deduplicated by full vertex sequence, not by endpoint: distinct
    sequences with the same terminal can expose different chords later.
    """
    _require_path(g, path)
    if weights is None:
        weights = compute_weights(g)
    start = path[0]
    seen: set[PathSeq] = {path}
    order: list[PathSeq] = [path]
    queue: deque[PathSeq] = deque([path])
    reps: dict[int, PathSeq] = {}
    if path[-1] != start:
        reps[path[-1]] = path
    while queue:
        cur = queue.popleft()
        for nxt in simple_transforms(g, cur):
            if nxt in seen:
                continue
            if len(seen) >= budget:
                raise ClosureBudgetError(
                    f"rotation closure exceeded budget of {budget} paths"
                )
            seen.add(nxt)
            order.append(nxt)
            queue.append(nxt)
            term = nxt[-1]
            if term != start and term not in reps:
                reps[term] = nxt
    terminals = frozenset(reps)
    pivots: dict[int, int | None] = {}
    s_sets: dict[int, frozenset[int]] = {}
    for v, rep in reps.items():
        k = len(rep) - 1
        back = weights.c[v] - 1
        pivots[v] = rep[k - back] if k >= back else None
        s_sets[v] = frozenset(u for u in g.neighbors(v) if u not in terminals)
    return TransformClosure(start, path, tuple(order), terminals, reps, pivots, s_sets)


def verify_closure_lemmas(g: Graph, tc: TransformClosure, weights: VertexWeights) -> dict:
    """Check the structural facts the closure is supposed to satisfy.

    Per terminal v with representative P_v (k edges, distances along P_v
    measured back from v), with cmin the least terminal weight:
      good_path          no neighbor of v at distance >= cmin
      back_window        every neighbor of v at distance <= c(v)-1
      terminals_in_back  no terminal at distance >= c(v)-1 on P_v
      outside_bound      |S_v| <= c(v) - |L|
      degree_bound       d(v) <= |L|
      pivot_defined      k >= c(v)-1
    plus position invariance: the first |V(P)|-cmin+1 entries agree across
    every path in the closure.
    """
    failures: list[dict] = []
    checked = 0
    terms = tc.terminal_set
    if terms:
        cmin = min(weights.c[v] for v in terms)
        nverts = len(tc.base)
        fixed = max(0, nverts - cmin + 1)
        prefix = tc.base[:fixed]
        for p in tc.paths:
            checked += 1
            if p[:fixed] != prefix:
                failures.append(
                    {"check": "position_invariance", "path": p, "expected_prefix": prefix}
                )
        for v in sorted(terms):
            rep = tc.representatives[v]
            k = len(rep) - 1
            pos = {u: i for i, u in enumerate(rep)}
            cv = weights.c[v]
            checked += 1
            if k < cv - 1:
                failures.append({"check": "pivot_defined", "terminal": v, "c": cv, "k": k})
            for u in g.neighbors(v):
                checked += 1
                if u not in pos:
                    failures.append({"check": "back_window", "terminal": v, "neighbor": u})
                    continue
                dist = k - pos[u]
                if dist >= cmin:
                    failures.append(
                        {"check": "good_path", "terminal": v, "neighbor": u, "dist": dist}
                    )
                if dist > cv - 1:
                    failures.append(
                        {"check": "back_window", "terminal": v, "neighbor": u, "dist": dist}
                    )
            for u in terms:
                checked += 1
                dist = k - pos[u]
                if dist >= cv - 1 and u != v:
                    failures.append(
                        {"check": "terminals_in_back", "terminal": v, "other": u, "dist": dist}
                    )
            checked += 2
            if len(tc.s_sets[v]) > cv - len(terms):
                failures.append(
                    {"check": "outside_bound", "terminal": v,
                     "s_size": len(tc.s_sets[v]), "c": cv, "l_size": len(terms)}
                )
            if g.degree(v) > len(terms):
                failures.append(
                    {"check": "degree_bound", "terminal": v,
                     "degree": g.degree(v), "l_size": len(terms)}
                )
    return {"checked": checked, "failures": failures, "ok": not failures}


@dataclass(frozen=True)
class PeelStage:
    """One live stage: its original-id vertex list, the dense induced graph,
    the start vertex, base path, terminal set (all original ids) and the
    per-vertex cycle weights measured inside this stage."""

    vertices: tuple[int, ...]
    graph: Graph
    start: int
    path: PathSeq
    terminals: frozenset[int]
    cycle_weights: dict[int, int]


@dataclass(frozen=True)
class PeelTrace:
    graph: Graph
    start: int
    stages: tuple[PeelStage, ...]

    @property
    def t(self) -> int:
        return len(self.stages) - 1


def peel(
    g: Graph,
    u: int,
    dp_limit: int = DEFAULT_DP_LIMIT,
    budget: int = DEFAULT_CLOSURE_BUDGET,
) -> PeelTrace:
    """Run the iterative terminal-set removal starting from a heaviest vertex.

    Stage i takes a longest x-path in the live graph, removes the closure's
    terminal set, then drops isolated vertices; x is re-chosen (max stage
    weight, lowest id on ties) only once it has been removed.
    """
    if g.n == 0:
        return PeelTrace(g, u, ())
    base = compute_weights(g, dp_limit)
    if not 0 <= u < g.n:
        raise ValueError(f"start vertex {u} not in graph")
    if base.c[u] != base.circumference:
        raise ValueError(
            f"start vertex {u} has weight {base.c[u]}, not the maximum {base.circumference}"
        )
    stages: list[PeelStage] = []
    live = list(range(g.n))
    x = u
    while live:
        dense = g.induced(live)
        w_i = compute_weights(dense, dp_limit)
        if x not in live:
            best = max(w_i.c)
            x = next(v for i, v in enumerate(live) if w_i.c[i] == best)
        x_local = live.index(x)
        path_local = longest_path_from(dense, x_local, dp_limit)
        tc = transform_closure(dense, path_local, weights=w_i, budget=budget)
        terminals = frozenset(live[i] for i in tc.terminal_set)
        stages.append(
            PeelStage(
                vertices=tuple(live),
                graph=dense,
                start=x,
                path=tuple(live[i] for i in path_local),
                terminals=terminals,
                cycle_weights={v: w_i.c[i] for i, v in enumerate(live)},
            )
        )
        kept = [v for v in live if v not in terminals]
        kept_set = set(kept)
        live = [
            v for v in kept
            if any(nb in kept_set for nb in g.neighbors(v))
        ]
    return PeelTrace(g, u, tuple(stages))


def verify_peel_decomposition(g: Graph, trace: PeelTrace, s: int) -> dict:
    """Exact split of the s-clique count across stages, plus stage-weight
    monotonicity against the input graph and the trace bookkeeping rules."""
    failures: list[dict] = []
    base = compute_weights(g)
    total = 0
    seen_terminals: set[int] = set()
    for i, stage in enumerate(trace.stages):
        index = {v: j for j, v in enumerate(stage.vertices)}
        local_terms = [index[v] for v in stage.terminals]
        total += count_cliques_touching(stage.graph, s, local_terms)
        overlap = seen_terminals.intersection(stage.terminals)
        if overlap:
            failures.append({"check": "terminals_disjoint", "stage": i, "overlap": sorted(overlap)})
        seen_terminals.update(stage.terminals)
        if trace.start in stage.terminals:
            failures.append({"check": "start_never_terminal", "stage": i})
        for v, cw in stage.cycle_weights.items():
            if cw > base.c[v]:
                failures.append(
                    {"check": "weight_monotone", "stage": i, "vertex": v,
                     "stage_weight": cw, "base_weight": base.c[v]}
                )
    lhs = count_cliques(g, s)
    if lhs != total:
        failures.append({"check": "clique_split", "lhs": lhs, "stage_sum": total})
    return {"s": s, "clique_count": lhs, "stage_sum": total, "failures": failures, "ok": not failures}
