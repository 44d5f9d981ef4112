"""Immutable bitmask graphs, graph6 and edge-list I/O, constructors and generators.

Vertices are dense ids 0..n-1 with n capped at 64 so a single machine word
holds one adjacency row. Everything downstream (subset DP, clique recursion,
rotation closures) works on these rows directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

MAX_VERTICES = 64

# Canonical-form enumeration is brute force over relabelings; past 8 vertices
# the class counts (and the DP verifiers downstream) are out of desk range.
ENUMERATION_LIMIT = 8


class GraphParseError(ValueError):
    """Malformed graph6 or edge-list input."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds a configured size guard."""


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int):
        return iter_bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on ``vertices``, relabeled densely in sorted order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vs), tuple(rows))


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def pair_index(i: int, j: int) -> int:
    """Position of the unordered pair (i, j), i < j, in column-major order."""
    return j * (j - 1) // 2 + i


def from_pair_mask(n: int, mask: int) -> Graph:
    """Graph from an edge bitmask laid out in column-major pair order."""
    return Graph(n, tuple(_adj_from_mask(n, mask)))


def to_pair_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= 1 << pair_index(u, v)
    return mask


def _adj_from_mask(n: int, mask: int) -> list[int]:
    rows = [0] * n
    bit = 0
    for j in range(n):
        for i in range(j):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return rows


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(n, tuple(rows))


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components(g)) == 1


# ---------------------------------------------------------------------------
# graph6 codec (column-major upper triangle, 6-bit chunks offset by 63)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise GraphParseError("empty graph6 input")
    data = line.encode("ascii", errors="replace")
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"out-of-range graph6 byte at offset {off}")
    if data[0] == 126:
        if len(data) < 4:
            raise GraphParseError("truncated long-form size header at offset 1")
        if data[1] == 126:
            raise GraphParseError("8-byte size header at offset 1 exceeds supported range")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body_start = 4
    else:
        n = data[0] - 63
        body_start = 1
    if n > MAX_VERTICES:
        raise GraphParseError(f"graph6 header declares n={n}, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(data) - body_start
    if have < need:
        raise GraphParseError(
            f"truncated graph6 payload at offset {len(data)} (need {need} body bytes, got {have})"
        )
    if have > need:
        raise GraphParseError(f"trailing garbage at offset {body_start + need}")
    mask = 0
    bit = 0
    for k in range(need):
        chunk = data[body_start + k] - 63
        for t in range(6):
            if bit >= nbits:
                if chunk >> (5 - t) & 1:
                    raise GraphParseError(f"nonzero padding bits at offset {body_start + k}")
                continue
            if chunk >> (5 - t) & 1:
                mask |= 1 << bit
            bit += 1
    return from_pair_mask(n, mask)


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError(f"graph6 writer supports n <= 62 (single-byte header); got n={g.n}")
    mask = to_pair_mask(g)
    nbits = g.n * (g.n - 1) // 2
    out = [chr(63 + g.n)]
    for k in range(0, nbits, 6):
        chunk = 0
        for t in range(6):
            if k + t < nbits and mask >> (k + t) & 1:
                chunk |= 1 << (5 - t)
        out.append(chr(63 + chunk))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` header plus one ``u v`` edge per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphParseError(f"bad edge-list header {lines[0]!r}, expected 'n <count>'")
    try:
        n = int(head[1])
    except ValueError:
        raise GraphParseError(f"bad vertex count {head[1]!r}") from None
    if not 0 <= n <= MAX_VERTICES:
        raise GraphParseError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"bad edge on line {lineno}: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"bad edge on line {lineno}: {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphParseError(f"edge {u} {v} on line {lineno} out of range")
        edges.append((u, v))
    return from_edges(n, set(tuple(sorted(e)) for e in edges))


# ---------------------------------------------------------------------------
# Standard constructors
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n in (1, 2):
        raise ValueError(f"cycle_graph needs n = 0 or n >= 3, got {n}")
    if n == 0:
        return Graph(0, ())
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return from_edges(n, (e for e in combinations(range(n), 2) if rng.random() < p))


# ---------------------------------------------------------------------------
# Isomorphism-free enumeration
# ---------------------------------------------------------------------------

def canonical_mask(g: Graph) -> int:
    """Lexicographically minimal pair-order edge bitmask over all relabelings.

    Exact brute-force search: positions are assigned one vertex at a time,
    keeping every relabeling whose next adjacency column ties the minimum.
    A prefix of the bit-string is fixed once its columns are fixed, so the
    greedy column choice is optimal; twin vertices are deduplicated since
    swapping them is an automorphism.
    """
    return _canonical_mask(g.n, g.adj)


def _canonical_mask(n: int, adj) -> int:
    if n <= 1:
        return 0
    states: list[tuple[tuple[int, ...], int]] = [((), 0)]
    mask = 0
    bit = 0
    for pos in range(n):
        best_col = None
        chosen: list[tuple[tuple[int, ...], int]] = []
        for placed, used in states:
            cands: dict[int, list[int]] = {}
            for v in range(n):
                if used >> v & 1:
                    continue
                col = 0
                for t, w in enumerate(placed):
                    col = (col << 1) | (adj[v] >> w & 1)
                cands.setdefault(col, []).append(v)
            if not cands:
                continue
            col = min(cands)
            if best_col is None or col < best_col:
                best_col = col
                chosen = []
            if col == best_col:
                reps: list[int] = []
                for v in cands[col]:
                    bv = 1 << v
                    if any((adj[v] ^ adj[w]) & ~(bv | (1 << w)) == 0 for w in reps):
                        continue
                    reps.append(v)
                    chosen.append((placed + (v,), used | bv))
        states = chosen
        for t in range(pos):
            if best_col >> (pos - 1 - t) & 1:
                mask |= 1 << (bit + t)
        bit += pos
    return mask


@lru_cache(maxsize=None)
def _canonical_reps(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    prev = _canonical_reps(n - 1)
    base = (n - 1) * (n - 2) // 2
    reps = set()
    for old in prev:
        for nb in range(1 << (n - 1)):
            cand = old | (nb << base)
            reps.add(_canonical_mask(n, _adj_from_mask(n, cand)))
    return tuple(sorted(reps))


def enumerate_graphs(n: int, connected_only: bool = False):
    """Yield one representative per isomorphism class of n-vertex graphs."""
    if n > ENUMERATION_LIMIT:
        raise ResourceLimitError(f"enumeration capped at n <= {ENUMERATION_LIMIT}, got {n}")
    for mask in _canonical_reps(n):
        g = from_pair_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g


# ---------------------------------------------------------------------------
# Extremal-family generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockSpec:
    """Rooted tree of clique blocks: ``orders[0]`` is the root.

    ``parents[i]`` names the parent of block i+1 (defaults to a path-shaped
    tree). ``attachments[i]`` optionally picks the cut vertex as an index into
    the parent block's realized vertex tuple; the default is the parent's
    lowest-id vertex that is not already a cut vertex.
    """

    orders: tuple[int, ...]
    parents: tuple[int, ...] | None = None
    attachments: tuple[int | None, ...] | None = None

    def resolved_parents(self) -> tuple[int, ...]:
        k = len(self.orders)
        if self.parents is None:
            return tuple(range(k - 1))
        return self.parents

    def validate(self):
        k = len(self.orders)
        if k == 0:
            raise ValueError("block spec needs at least one block")
        if any(o < 2 for o in self.orders):
            raise ValueError(f"block orders must be >= 2, got {self.orders}")
        parents = self.resolved_parents()
        if len(parents) != k - 1:
            raise ValueError(f"need {k - 1} parent entries, got {len(parents)}")
        for child, par in enumerate(parents, start=1):
            if not 0 <= par < child:
                raise ValueError(f"parent of block {child} must be an earlier block, got {par}")
            if self.orders[child] > self.orders[par]:
                raise ValueError(
                    f"block {child} (order {self.orders[child]}) exceeds its parent "
                    f"block {par} (order {self.orders[par]})"
                )
        if self.attachments is not None and len(self.attachments) != k - 1:
            raise ValueError(f"need {k - 1} attachment entries, got {len(self.attachments)}")

    def vertex_count(self) -> int:
        return sum(self.orders) - (len(self.orders) - 1)


def generate_pdbg(spec: BlockSpec) -> Graph:
    """Realize a parent-dominated block graph: each block a clique, consecutive
    blocks sharing exactly the chosen cut vertex."""
    spec.validate()
    total = spec.vertex_count()
    if total > MAX_VERTICES:
        raise ValueError(f"spec realizes {total} vertices, limit is {MAX_VERTICES}")
    parents = spec.resolved_parents()
    attachments = spec.attachments or (None,) * (len(spec.orders) - 1)
    realized: list[tuple[int, ...]] = [tuple(range(spec.orders[0]))]
    cut: set[int] = set()
    edges = list(combinations(realized[0], 2))
    nxt = spec.orders[0]
    for child, par in enumerate(parents, start=1):
        choice = attachments[child - 1]
        parent_vs = realized[par]
        if choice is None:
            free = [v for v in parent_vs if v not in cut]
            attach = min(free) if free else min(parent_vs)
        else:
            if not 0 <= choice < len(parent_vs):
                raise ValueError(f"attachment index {choice} out of range for block {par}")
            attach = parent_vs[choice]
        fresh = tuple(range(nxt, nxt + spec.orders[child] - 1))
        nxt += len(fresh)
        block = (attach,) + fresh
        realized.append(block)
        cut.add(attach)
        edges.extend(combinations(block, 2))
    return from_edges(total, edges)


def random_clique_forest(num_cliques: int, min_order: int, max_order: int, seed: int) -> Graph:
    if min_order < 1:
        raise ValueError(f"min_order must be >= 1, got {min_order}")
    if max_order < min_order:
        raise ValueError(f"max_order {max_order} below min_order {min_order}")
    rng = random.Random(seed)
    orders = [rng.randint(min_order, max_order) for _ in range(num_cliques)]
    if sum(orders) > MAX_VERTICES:
        raise ValueError(f"forest realizes {sum(orders)} vertices, limit is {MAX_VERTICES}")
    return disjoint_union(*(complete_graph(o) for o in orders)) if orders else Graph(0, ())
