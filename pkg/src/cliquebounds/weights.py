"""Per-vertex longest-path and longest-cycle weights, exactly.

p(v) is the number of edges on the longest simple path containing v.
c(v) is the length of the longest cycle containing v, or 2 when v lies on
no cycle. Both come from subset dynamic programming over (vertex set,
endpoint) states; block graphs get a polynomial tree-DP shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, ResourceLimitError, iter_bits

DEFAULT_DP_LIMIT = 18


@dataclass(frozen=True)
class VertexWeights:
    """p and c arrays plus the circumference (max c; 0 on the empty graph)."""

    p: tuple[int, ...]
    c: tuple[int, ...]
    circumference: int


def _guard(n: int, dp_limit: int):
    if n > dp_limit:
        raise ResourceLimitError(
            f"subset DP guarded at n <= {dp_limit} (got n={n}); use the block-graph "
            "shortcut or raise dp_limit explicitly"
        )


def compute_weights(g: Graph, dp_limit: int = DEFAULT_DP_LIMIT) -> VertexWeights:
    """Exact p(v) and c(v) for every vertex.

    Two tables over subsets S: endpoints of simple paths spanning exactly S
    (any start) drive p; endpoints of paths spanning S that start at min(S)
    detect cycles, closing S into a cycle when some endpoint is adjacent to
    min(S) and |S| >= 3.
    """
    n = g.n
    _guard(n, dp_limit)
    if n == 0:
        return VertexWeights((), (), 0)
    adj = g.adj
    size = 1 << n

    endp = [0] * size
    for v in range(n):
        endp[1 << v] = 1 << v
    p = [0] * n
    for s_mask in range(1, size):
        ends = endp[s_mask]
        if not ends:
            continue
        length = s_mask.bit_count() - 1
        for v in iter_bits(s_mask):
            if p[v] < length:
                p[v] = length
        for u in iter_bits(ends):
            ext = adj[u] & ~s_mask
            for w in iter_bits(ext):
                endp[s_mask | (1 << w)] |= 1 << w

    rooted = [0] * size
    for v in range(n):
        rooted[1 << v] = 1 << v
    c = [2] * n
    for s_mask in range(1, size):
        ends = rooted[s_mask]
        if not ends:
            continue
        low = s_mask & -s_mask
        above = ~((low << 1) - 1)
        if s_mask.bit_count() >= 3 and ends & adj[low.bit_length() - 1]:
            span = s_mask.bit_count()
            for v in iter_bits(s_mask):
                if c[v] < span:
                    c[v] = span
        for u in iter_bits(ends):
            ext = adj[u] & ~s_mask & above
            for w in iter_bits(ext):
                rooted[s_mask | (1 << w)] |= 1 << w

    return VertexWeights(tuple(p), tuple(c), max(c))


def _max_len_from(adj, start: int, avail: int) -> int:
    """Longest simple path length starting at ``start`` inside ``avail``."""
    cur = {1 << start: 1 << start}
    length = 0
    while True:
        nxt: dict[int, int] = {}
        for s_mask, ends in cur.items():
            for u in iter_bits(ends):
                ext = adj[u] & avail & ~s_mask
                for w in iter_bits(ext):
                    key = s_mask | (1 << w)
                    nxt[key] = nxt.get(key, 0) | (1 << w)
        if not nxt:
            return length
        cur = nxt
        length += 1


def longest_path_from(g: Graph, v0: int, dp_limit: int = DEFAULT_DP_LIMIT) -> tuple[int, ...]:
    """A maximum-length simple path starting at v0, lexicographically least.

    Built greedily: at each step take the smallest next vertex from which the
    remaining graph still admits a completion to full length.
    """
    _guard(g.n, dp_limit)
    if not 0 <= v0 < g.n:
        raise ValueError(f"start vertex {v0} not in graph")
    adj = g.adj
    avail = g.full_mask
    target = _max_len_from(adj, v0, avail)
    path = [v0]
    avail &= ~(1 << v0)
    remaining = target
    cur = v0
    while remaining:
        for w in iter_bits(adj[cur] & avail):
            if _max_len_from(adj, w, avail) >= remaining - 1:
                path.append(w)
                avail &= ~(1 << w)
                cur = w
                remaining -= 1
                break
        else:
            raise AssertionError("greedy completion lost feasibility")
    return tuple(path)


def compute_weights_block_graph(g: Graph) -> VertexWeights:
    """Structural weights for graphs whose every block is a clique.

    c(v) is the largest order of a block containing v (2 when that is at most
    2, i.e. v lies on no cycle). p(v) comes from the heaviest path through a
    block containing v in the block-cut tree, where a tree-path covering
    blocks B_1..B_m realizes a graph path of sum(|B_i| - 1) edges. Accepts
    disjoint unions of block graphs; each component is handled on its own.
    """
    from .extremal import block_decomposition

    if g.n == 0:
        return VertexWeights((), (), 0)
    decomp = block_decomposition(g)
    for blk in decomp.blocks:
        for v in blk:
            need = [u for u in blk if u != v]
            if any(not g.has_edge(u, v) for u in need):
                raise ValueError("input is not a block graph: some block is not a clique")

    order = [len(b) for b in decomp.blocks]
    c = [2] * g.n
    blocks_at: list[list[int]] = [[] for _ in range(g.n)]
    for bi, blk in enumerate(decomp.blocks):
        for v in blk:
            blocks_at[v].append(bi)
            if order[bi] >= 3 and c[v] < order[bi]:
                c[v] = order[bi]

    # Bipartite block-cut tree: block nodes ('b', i) and cut nodes ('c', v).
    tree: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for bi in range(len(decomp.blocks)):
        tree[("b", bi)] = []
    for v in decomp.cut_vertices:
        tree[("c", v)] = []
    for bi, v in decomp.tree_edges:
        tree[("b", bi)].append(("c", v))
        tree[("c", v)].append(("b", bi))

    def weight(node) -> int:
        return order[node[1]] - 1 if node[0] == "b" else 0

    best_through = [0] * len(decomp.blocks)
    seen: set[tuple[str, int]] = set()
    for root_bi in range(len(decomp.blocks)):
        root = ("b", root_bi)
        if root in seen:
            continue
        parent: dict[tuple[str, int], tuple[str, int] | None] = {root: None}
        topo = [root]
        for node in topo:
            seen.add(node)
            for nb in tree[node]:
                if nb not in parent:
                    parent[nb] = node
                    topo.append(nb)
        down = {node: 0 for node in topo}
        for node in reversed(topo):
            kids = [nb for nb in tree[node] if parent.get(nb) == node]
            down[node] = weight(node) + max((down[k] for k in kids), default=0)
        up = {root: 0}
        for node in topo:
            kids = [nb for nb in tree[node] if parent.get(nb) == node]
            for k in kids:
                others = max((down[o] for o in kids if o != k), default=0)
                up[k] = max(0, weight(node) + max(up[node], others))
        for node in topo:
            if node[0] != "b":
                continue
            kids = [nb for nb in tree[node] if parent.get(nb) == node]
            arms = sorted((down[k] for k in kids), reverse=True) + [up[node]]
            arms.sort(reverse=True)
            arm1 = arms[0] if arms else 0
            arm2 = arms[1] if len(arms) > 1 else 0
            best_through[node[1]] = weight(node) + max(arm1, 0) + max(arm2, 0)

    p = [0] * g.n
    for v in range(g.n):
        p[v] = max(best_through[bi] for bi in blocks_at[v])
    return VertexWeights(tuple(p), tuple(c), max(c))
