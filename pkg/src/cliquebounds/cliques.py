"""Exact clique counting and the fractional per-vertex contribution scheme.

All bound arithmetic downstream is exact rational (fractions.Fraction);
equality detection hinges on exact ties, so nothing here ever floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graphs import Graph, iter_bits


def binom(a: int, b: int) -> int:
    """Binomial with the zero-extension convention: 0 when b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _degeneracy_order(g: Graph) -> list[int]:
    remaining = g.full_mask
    order = []
    while remaining:
        best = min(iter_bits(remaining), key=lambda v: ((g.adj[v] & remaining).bit_count(), v))
        order.append(best)
        remaining &= ~(1 << best)
    return order


def _later_masks(g: Graph) -> list[int]:
    order = _degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    later = [0] * g.n
    for v in range(g.n):
        later[v] = sum(1 << u for u in iter_bits(g.adj[v]) if pos[u] > pos[v])
    return later


def count_cliques(g: Graph, s: int) -> int:
    """Number of s-vertex cliques, by pivoted bitmask expansion."""
    if s < 0:
        raise ValueError(f"clique order must be >= 0, got {s}")
    if s == 0:
        return 1
    if s == 1:
        return g.n
    later = _later_masks(g)

    def expand(cand: int, r: int) -> int:
        if r == 0:
            return 1
        if cand.bit_count() < r:
            return 0
        if r == 1:
            return cand.bit_count()
        total = 0
        for v in iter_bits(cand):
            total += expand(cand & later[v], r - 1)
        return total

    return expand(g.full_mask, s)


def enumerate_cliques(g: Graph, s: int):
    """Yield every s-clique as a sorted vertex tuple."""
    if s < 0:
        raise ValueError(f"clique order must be >= 0, got {s}")
    if s == 0:
        yield ()
        return
    later = _later_masks(g)

    def expand(cand: int, chosen: tuple[int, ...]):
        if len(chosen) == s:
            yield tuple(sorted(chosen))
            return
        for v in iter_bits(cand):
            yield from expand(cand & later[v], chosen + (v,))

    yield from expand(g.full_mask, ())


def count_cliques_touching(g: Graph, s: int, touch) -> int:
    """Count s-cliques meeting the vertex set ``touch`` at least once."""
    touch_set = set(touch)
    if any(not 0 <= v < g.n for v in touch_set):
        raise ValueError("touch set contains vertices outside the graph")
    if not touch_set:
        return 0
    rest = g.induced(v for v in range(g.n) if v not in touch_set)
    return count_cliques(g, s) - count_cliques(rest, s)


@dataclass(frozen=True)
class ContributionTable:
    """Per-vertex shares N_v for (g, s, marked): a clique meeting ``marked``
    in k vertices hands 1/k to each of those k, so the shares sum exactly to
    the touching count."""

    s: int
    marked: frozenset[int]
    shares: dict[int, Fraction]

    def total(self) -> Fraction:
        return sum(self.shares.values(), Fraction(0))


def contribution_table(g: Graph, s: int, marked) -> ContributionTable:
    if s < 1:
        raise ValueError(f"clique order must be >= 1, got {s}")
    marked_set = frozenset(marked)
    if any(not 0 <= v < g.n for v in marked_set):
        raise ValueError("marked set contains vertices outside the graph")
    shares = {v: Fraction(0) for v in marked_set}
    for clique in enumerate_cliques(g, s):
        inside = marked_set.intersection(clique)
        if not inside:
            continue
        piece = Fraction(1, len(inside))
        for v in inside:
            shares[v] += piece
    return ContributionTable(s, marked_set, shares)


def contribution_upper_bound(d: int, s_size: int, s: int) -> Fraction:
    """Cap on one vertex's share given degree d, with s_size neighbors outside
    the marked set: sum over t of (1/(s-t)) C(s_size, t) C(d-s_size, s-t-1).

    The sum telescopes to (1/(d-s_size+1)) (C(d+1, s) - C(s_size, s)); both
    forms are evaluated and must agree exactly.
    """
    if s < 1:
        raise ValueError(f"clique order must be >= 1, got {s}")
    if not 0 <= s_size <= d:
        raise ValueError(f"need 0 <= s_size <= d, got s_size={s_size}, d={d}")
    total = Fraction(0)
    for t in range(s):
        total += Fraction(binom(s_size, t) * binom(d - s_size, s - t - 1), s - t)
    closed = Fraction(binom(d + 1, s) - binom(s_size, s), d - s_size + 1)
    if total != closed:
        raise AssertionError(
            f"contribution bound forms disagree at d={d}, s_size={s_size}, s={s}: "
            f"{total} vs {closed}"
        )
    return total
