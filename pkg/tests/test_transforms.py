import random

import pytest

from cliquebounds import (
    ClosureBudgetError,
    complete_graph,
    compute_weights,
    count_cliques,
    count_cliques_touching,
    cycle_graph,
    disjoint_union,
    from_edges,
    is_connected,
    longest_path_from,
    path_graph,
    peel,
    random_graph,
    simple_transforms,
    transform_closure,
    verify_closure_lemmas,
    verify_peel_decomposition,
)
from oracles import bowtie


def closure_from_heaviest(g):
    w = compute_weights(g)
    u = min(v for v in range(g.n) if w.c[v] == w.circumference)
    tc = transform_closure(g, longest_path_from(g, u), weights=w)
    return w, tc


class TestSimpleTransforms:
    def test_c4_single_rotation(self):
        assert simple_transforms(cycle_graph(4), (0, 1, 2, 3)) == [(0, 3, 2, 1)]

    def test_full_path_has_none(self):
        assert simple_transforms(path_graph(4), (0, 1, 2, 3)) == []

    def test_k4_two_rotations(self):
        got = simple_transforms(complete_graph(4), (0, 1, 2, 3))
        assert got == [(0, 3, 2, 1), (0, 1, 3, 2)]
        assert sorted(p[-1] for p in got) == [1, 2]

    def test_rotation_is_involutive(self):
        rng = random.Random(12)
        for _ in range(50):
            g = random_graph(rng.randint(2, 8), rng.uniform(0.3, 0.8), rng.randrange(1 << 30))
            v0 = rng.randrange(g.n)
            p = longest_path_from(g, v0)
            for q in simple_transforms(g, p):
                assert p in simple_transforms(g, q)

    def test_rejects_non_path(self):
        with pytest.raises(ValueError):
            simple_transforms(cycle_graph(4), (0, 2))

    def test_rejects_extendable_path(self):
        with pytest.raises(ValueError, match="longest"):
            simple_transforms(path_graph(4), (0, 1, 2))


class TestTransformClosure:
    def test_path_graph_trivial(self):
        g = path_graph(5)
        tc = transform_closure(g, (0, 1, 2, 3, 4))
        assert tc.terminal_set == frozenset({4})
        assert len(tc.paths) == 1

    def test_k4_all_non_start_terminals(self):
        g = complete_graph(4)
        tc = transform_closure(g, (0, 1, 2, 3))
        assert tc.terminal_set == frozenset({1, 2, 3})

    def test_c5_two_terminals(self):
        g = cycle_graph(5)
        tc = transform_closure(g, (0, 1, 2, 3, 4))
        assert tc.terminal_set == frozenset({1, 4})

    def test_single_vertex_excludes_start(self):
        g = from_edges(1, [])
        tc = transform_closure(g, (0,))
        assert tc.terminal_set == frozenset()

    def test_start_and_vertex_set_preserved(self):
        rng = random.Random(55)
        for _ in range(40):
            g = random_graph(rng.randint(2, 9), rng.uniform(0.25, 0.6), rng.randrange(1 << 30))
            v0 = rng.randrange(g.n)
            base = longest_path_from(g, v0)
            tc = transform_closure(g, base)
            for p in tc.paths:
                assert p[0] == v0
                assert set(p) == set(base)
                assert len(p) == len(base)

    def test_closure_is_symmetric(self):
        rng = random.Random(56)
        for _ in range(20):
            g = random_graph(rng.randint(3, 7), rng.uniform(0.4, 0.8), rng.randrange(1 << 30))
            v0 = rng.randrange(g.n)
            tc = transform_closure(g, longest_path_from(g, v0))
            other = random.Random(0).choice(tc.paths)
            back = transform_closure(g, other)
            assert set(back.paths) == set(tc.paths)

    def test_representatives_end_at_terminal(self):
        _, tc = closure_from_heaviest(complete_graph(5))
        for v, rep in tc.representatives.items():
            assert rep[-1] == v

    def test_s_sets_are_outside_neighbors(self):
        g = complete_graph(5)
        _, tc = closure_from_heaviest(g)
        for v in tc.terminal_set:
            expect = {u for u in g.neighbors(v) if u not in tc.terminal_set}
            assert tc.s_sets[v] == frozenset(expect)

    def test_budget_error(self):
        g = complete_graph(8)
        with pytest.raises(ClosureBudgetError):
            transform_closure(g, longest_path_from(g, 0), budget=10)

    def test_deterministic(self):
        rng = random.Random(91)
        for _ in range(20):
            g = random_graph(rng.randint(2, 8), rng.uniform(0.3, 0.7), rng.randrange(1 << 30))
            base = longest_path_from(g, 0)
            a = transform_closure(g, base)
            b = transform_closure(g, base)
            assert a.paths == b.paths
            assert a.representatives == b.representatives


class TestClosureLemmas:
    def test_tree_passes(self):
        g = path_graph(6)
        w, tc = closure_from_heaviest(g)
        assert verify_closure_lemmas(g, tc, w)["ok"]

    def test_k5_equalities(self):
        g = complete_graph(5)
        w, tc = closure_from_heaviest(g)
        rep = verify_closure_lemmas(g, tc, w)
        assert rep["ok"]
        assert len(tc.terminal_set) == 4
        for v in tc.terminal_set:
            assert g.degree(v) == len(tc.terminal_set)
            assert len(tc.s_sets[v]) == w.c[v] - len(tc.terminal_set)

    def test_position_invariance_on_bowtie(self):
        g = bowtie()
        w = compute_weights(g)
        # start at a degree-2 vertex so the closure permutes only the far triangle
        tc = transform_closure(g, longest_path_from(g, 0), weights=w)
        rep = verify_closure_lemmas(g, tc, w)
        assert rep["ok"]
        fixed = len(tc.base) - min(w.c[v] for v in tc.terminal_set) + 1
        assert fixed == 3
        assert all(p[:3] == tc.base[:3] for p in tc.paths)

    def test_bulk_random_connected(self):
        rng = random.Random(2024)
        done = 0
        while done < 150:
            g = random_graph(rng.randint(2, 9), rng.uniform(0.2, 0.6), rng.randrange(1 << 30))
            if not is_connected(g):
                continue
            done += 1
            w, tc = closure_from_heaviest(g)
            assert verify_closure_lemmas(g, tc, w)["ok"]


class TestPeel:
    def test_complete_graph_single_stage(self):
        g = complete_graph(6)
        trace = peel(g, 0)
        assert len(trace.stages) == 1
        assert trace.stages[0].terminals == frozenset(range(1, 6))

    def test_p3_trace(self):
        trace = peel(path_graph(3), 0)
        assert [sorted(st.terminals) for st in trace.stages] == [[2], [1]]
        assert [st.start for st in trace.stages] == [0, 0]

    def test_empty_graph(self):
        trace = peel(from_edges(0, []), 0)
        assert trace.stages == ()

    def test_isolated_vertices_dropped_not_peeled(self):
        g = from_edges(4, [(0, 1)])
        w = compute_weights(g)
        trace = peel(g, 0)
        assert all(v not in st.terminals for st in trace.stages for v in (2, 3))
        assert verify_peel_decomposition(g, trace, 2)["ok"]

    def test_requires_max_weight_start(self):
        g = disjoint_union(complete_graph(3), complete_graph(2))
        with pytest.raises(ValueError, match="maximum"):
            peel(g, 3)

    def test_k4_decomposition_value(self):
        g = complete_graph(4)
        trace = peel(g, 0)
        l0 = trace.stages[0].terminals
        assert count_cliques_touching(g, 3, l0) == 4 == count_cliques(g, 3)
        assert verify_peel_decomposition(g, trace, 3)["ok"]

    def test_bowtie_decomposition(self):
        g = bowtie()
        trace = peel(g, 2)
        for s in (2, 3):
            assert verify_peel_decomposition(g, trace, s)["ok"]

    def test_trace_deterministic(self):
        rng = random.Random(92)
        for _ in range(15):
            g = random_graph(rng.randint(1, 8), rng.uniform(0.2, 0.6), rng.randrange(1 << 30))
            w = compute_weights(g)
            u = min(v for v in range(g.n) if w.c[v] == w.circumference)
            assert peel(g, u) == peel(g, u)

    def test_stage_graphs_shrink_and_partition(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_graph(rng.randint(1, 9), rng.uniform(0.2, 0.7), rng.randrange(1 << 30))
            w = compute_weights(g)
            if g.n == 0:
                continue
            u = min(v for v in range(g.n) if w.c[v] == w.circumference)
            trace = peel(g, u)
            sizes = [len(st.vertices) for st in trace.stages]
            assert sizes == sorted(sizes, reverse=True)
            all_terms = [v for st in trace.stages for v in st.terminals]
            assert len(all_terms) == len(set(all_terms))
            assert u not in all_terms
            for s in (2, 3, 4):
                assert verify_peel_decomposition(g, trace, s)["ok"]
