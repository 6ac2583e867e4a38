"""Simple undirected graphs on at most 64 vertices, stored as neighbour bitsets.

Vertex ``v`` of a :class:`Graph` is adjacent to ``u`` iff bit ``u`` of
``adj[v]`` is set.  Graphs are immutable; every operation returns a new one.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("order", "adj")

    order: int
    adj: tuple[int, ...]

    def __init__(self, order: int, adj: Iterable[int] | None = None):
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"order must lie in [0, {MAX_ORDER}], got {order}")
        rows = tuple(adj) if adj is not None else (0,) * order
        if len(rows) != order:
            raise ValueError("adjacency has the wrong number of rows")
        full = (1 << order) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours outside the graph")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", rows)

    @classmethod
    def _trusted(cls, order: int, adj: tuple[int, ...]) -> "Graph":
        # Internal constructor for rows already known to be valid.
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adj", adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(order, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self):
        return hash((self.order, self.adj))

    def __repr__(self):
        from .graph6 import encode

        return f"Graph({encode(self)!r})"

    def __len__(self):
        return self.order

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.order) for u in bits(self.adj[v] >> v << v) if u > v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def induced_edges(self, mask: int) -> int:
        """Number of edges of the subgraph induced by the vertex set ``mask``."""
        adj = self.adj
        return sum((adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled ``0..len-1`` in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise ValueError("repeated vertex")
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph._trusted(len(vertices), tuple(rows))

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        gone = set(removed)
        return self.induced_subgraph([v for v in range(self.order) if v not in gone])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes vertex ``perm[v]``."""
        rows = [0] * self.order
        for v in range(self.order):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph._trusted(self.order, tuple(rows))


# ---------------------------------------------------------------------------
# Constructors for named graphs


def empty_graph(order: int) -> Graph:
    return Graph(order)


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    return Graph._trusted(order, tuple(full ^ (1 << v) for v in range(order)))


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(order, [(v, (v + 1) % order) for v in range(order)])


def path_graph(order: int) -> Graph:
    return Graph.from_edges(order, [(v, v + 1) for v in range(order - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    part = []
    for i, size in enumerate(sizes):
        part.extend([i] * size)
    order = len(part)
    return Graph.from_edges(
        order, [(u, v) for u, v in combinations(range(order), 2) if part[u] != part[v]]
    )


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# Structural operations


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.order, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(components: Sequence[Graph]) -> Graph:
    """Disjoint union, numbering vertices component by component."""
    total = sum(c.order for c in components)
    if total > MAX_ORDER:
        raise ValueError(f"union has order {total} > {MAX_ORDER}")
    rows: list[int] = []
    offset = 0
    for c in components:
        rows.extend(row << offset for row in c.adj)
        offset += c.order
    return Graph._trusted(total, tuple(rows))


def independence_number(g: Graph) -> int:
    """Exact independence number by branch and bound on neighbour bitsets."""
    return _alpha(g.adj, g.vertex_mask)


def _alpha(adj: Sequence[int], cand: int, best: int = 0, size: int = 0) -> int:
    # Vertices of degree <= 1 inside ``cand`` can always be taken greedily.
    while True:
        if not cand:
            return max(best, size)
        pivot = -1
        pivot_deg = -1
        taken = False
        for v in bits(cand):
            d = (adj[v] & cand).bit_count()
            if d <= 1:
                cand &= ~(adj[v] | 1 << v)
                size += 1
                taken = True
                break
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        if taken:
            continue
        break
    if size + cand.bit_count() <= best:
        return best
    best = _alpha(adj, cand & ~(adj[pivot] | 1 << pivot), best, size + 1)
    return _alpha(adj, cand & ~(1 << pivot), best, size)


def induced_edge_extrema(g: Graph, n: int) -> tuple[int, int]:
    """(min, max) edge count over all subgraphs induced by ``n`` vertices."""
    if not 0 <= n <= g.order:
        raise ValueError(f"n={n} must lie in [0, order={g.order}]")
    top = n * (n - 1) // 2
    lo, hi = top, 0
    adj = g.adj
    for combo in combinations(range(g.order), n):
        mask = 0
        for v in combo:
            mask |= 1 << v
        e = sum((adj[v] & mask).bit_count() for v in combo) // 2
        if e < lo:
            lo = e
        if e > hi:
            hi = e
        if lo == 0 and hi == top:
            break
    return lo, hi


def min_induced_edges(g: Graph, n: int) -> int:
    return induced_edge_extrema(g, n)[0]


def max_induced_edges(g: Graph, n: int) -> int:
    return induced_edge_extrema(g, n)[1]


def is_nm_graph(g: Graph, n: int, m: int) -> bool:
    """True iff every subgraph induced by ``n`` vertices has at most ``m`` edges."""
    if g.order < n:
        raise ValueError(f"(n, m) property needs order >= n; order={g.order}, n={n}")
    return not has_dense_subset(g.adj, g.order, n, m + 1)


def satisfies_ks_condition(g: Graph, k: int, s: int) -> bool:
    """True iff every subgraph induced by ``k`` vertices has at least ``s`` edges."""
    if g.order < k:
        raise ValueError(f"(k, s) condition needs order >= k; order={g.order}, k={k}")
    return not has_sparse_subset(g.adj, g.order, k, s - 1)


def has_dense_subset(adj: Sequence[int], order: int, n: int, at_least: int, forced: int = 0) -> bool:
    """Is there an ``n``-subset containing ``forced`` that induces >= ``at_least`` edges?"""
    return _search_subset(adj, order, n, at_least, forced, dense=True)


def has_sparse_subset(adj: Sequence[int], order: int, n: int, at_most: int, forced: int = 0) -> bool:
    """Is there an ``n``-subset containing ``forced`` that induces <= ``at_most`` edges?"""
    return _search_subset(adj, order, n, at_most, forced, dense=False)


def _search_subset(adj, order, n, target, forced, dense):
    # Depth-first over subsets in increasing vertex order, tracking the
    # induced edge count; prunes when the target can no longer be reached.
    need = n - forced.bit_count()
    if need < 0 or order < n:
        return False
    base = sum((adj[v] & forced).bit_count() for v in bits(forced)) // 2
    free = [v for v in range(order) if not forced >> v & 1]
    if dense and base + need * (need - 1) // 2 + need * forced.bit_count() < target:
        return False
    if not dense and base > target:
        return False

    def rec(start: int, chosen: int, left: int, edges: int) -> bool:
        if left == 0:
            return edges >= target if dense else edges <= target
        if dense:
            # optimistic: every further vertex joins everything chosen and each other
            if edges + left * chosen.bit_count() + left * (left - 1) // 2 < target:
                return False
        elif edges > target:
            return False
        for i in range(start, len(free) - left + 1):
            v = free[i]
            if rec(i + 1, chosen | 1 << v, left - 1, edges + (adj[v] & chosen).bit_count()):
                return True
        return False

    return rec(0, forced, need, base)


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or len(components(g)) == 1


def has_tree_component(g: Graph) -> bool:
    """True iff some connected component C has exactly |C| - 1 edges."""
    return any(g.induced_edges(c) == c.bit_count() - 1 for c in components(g))


def is_forest(g: Graph) -> bool:
    return g.num_edges() == g.order - len(components(g))


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best
