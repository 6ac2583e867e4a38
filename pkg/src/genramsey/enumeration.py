"""Isomorph-free generation of graphs by canonical augmentation.

Graphs grow one vertex at a time.  A child ``G + v`` of a parent ``G`` is kept
only when ``v`` lies in the automorphism orbit of the child's canonical
deletion vertex: the vertex maximising (degree, sum of neighbour degrees),
ties broken by smallest canonical position.  Siblings are made distinct by
adding ``v`` only for one neighbourhood per orbit of ``Aut(G)`` on vertex
subsets.  Every isomorphism class then arises exactly once.

Filters must be *hereditary*: closed under deleting vertices.  They are
evaluated on every partial graph, and only need to inspect structure that
involves the newest vertex (the last one); the rest was checked one level up.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .canon import canonical_labelling, orbit_ids
from .graph import Graph, _alpha, bits, has_dense_subset, has_sparse_subset

HARD_MAX_ORDER = 11
DEFAULT_MAX_ORDER = 10

Filter = Callable[[Sequence[int], int], bool]


class BudgetExceeded(Exception):
    """Raised when a requested order lies beyond the enumeration budget."""


@dataclass
class EnumerationStats:
    order: int = 0
    graphs_visited: int = 0
    graphs_after_filter: int = 0
    pruned_by_degree_bounds: int = 0
    elapsed: float = 0.0
    per_order: dict[int, int] = field(default_factory=dict)

    def merge(self, other: "EnumerationStats") -> None:
        self.graphs_visited += other.graphs_visited
        self.graphs_after_filter += other.graphs_after_filter
        self.pruned_by_degree_bounds += other.pruned_by_degree_bounds
        for q, c in other.per_order.items():
            self.per_order[q] = self.per_order.get(q, 0) + c

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "graphs_visited": self.graphs_visited,
            "graphs_after_filter": self.graphs_after_filter,
            "pruned_by_degree_bounds": self.pruned_by_degree_bounds,
            "elapsed": round(self.elapsed, 6),
        }


# ---------------------------------------------------------------------------
# Hereditary filters.  Each is called as ``f(adj, q)`` on a graph of order
# ``q`` whose newest vertex is ``q - 1``.


class NMFilter:
    """Every ``n`` vertices induce at most ``m`` edges (an (n, m) graph)."""

    def __init__(self, n: int, m: int):
        self.n, self.m = n, m

    def __call__(self, adj, q):
        if q < self.n:
            return True
        return not has_dense_subset(adj, q, self.n, self.m + 1, 1 << (q - 1))


class KSFilter:
    """Every ``k`` vertices induce at least ``s`` edges (the (k, s) condition)."""

    def __init__(self, k: int, s: int):
        self.k, self.s = k, s

    def __call__(self, adj, q):
        if q < self.k:
            return True
        if self.s == 1:
            v = q - 1
            rest = ((1 << q) - 1) & ~(adj[v] | 1 << v)
            return _alpha(adj, rest) < self.k - 1
        return not has_sparse_subset(adj, q, self.k, self.s - 1, 1 << (q - 1))


class AlphaBelow(KSFilter):
    """Independence number at most ``k - 1``."""

    def __init__(self, k: int):
        super().__init__(k, 1)


class MaxEdges:
    def __init__(self, limit: int):
        self.limit = limit

    def __call__(self, adj, q):
        return sum(row.bit_count() for row in adj) // 2 <= self.limit


class GirthAbove:
    """No cycle of length ``<= length`` (girth strictly greater than ``length``)."""

    def __init__(self, length: float):
        self.length = length

    def __call__(self, adj, q):
        v = q - 1
        nb = list(bits(adj[v]))
        if len(nb) < 2:
            return True
        keep = ((1 << q) - 1) & ~(1 << v)
        # a cycle through v of length L uses a path of length L - 2 between two neighbours
        limit = self.length - 2
        for i, a in enumerate(nb):
            targets = 0
            for b in nb[i + 1:]:
                targets |= 1 << b
            seen = frontier = 1 << a
            dist = 0
            while frontier and dist < limit:
                dist += 1
                nxt = 0
                for x in bits(frontier):
                    nxt |= adj[x]
                frontier = nxt & keep & ~seen
                if frontier & targets:
                    return False
                seen |= frontier
        return True


class Forest(GirthAbove):
    def __init__(self):
        super().__init__(float("inf"))


class DegreeWindow:
    """Degrees of the final order-``target`` graph must land in ``[lo, hi]``.

    A partial graph of order ``q`` is discarded when a degree already exceeds
    ``hi`` or cannot reach ``lo`` with the ``target - q`` vertices still to come.
    """

    def __init__(self, target: int, lo: int, hi: int):
        self.target, self.lo, self.hi = target, lo, hi

    def __call__(self, adj, q):
        slack = self.target - q
        for row in adj:
            d = row.bit_count()
            if d > self.hi or d + slack < self.lo:
                return False
        return True


class AllOf:
    def __init__(self, *filters: Filter):
        self.filters = [f for f in filters if f is not None]

    def __call__(self, adj, q):
        for f in self.filters:
            if not f(adj, q):
                return False
        return True


# ---------------------------------------------------------------------------
# Augmentation


def _subset_orbit_reps(q: int, gens: Sequence[Sequence[int]], min_size: int) -> list[int]:
    full = 1 << q
    if not gens:
        return [s for s in range(full) if s.bit_count() >= min_size]
    seen = bytearray(full)
    reps = []
    for s in range(full):
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        while stack:
            t = stack.pop()
            for g in gens:
                u = 0
                for x in bits(t):
                    u |= 1 << g[x]
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)
        if s.bit_count() >= min_size:
            reps.append(s)
    return reps


def _children(adj: tuple[int, ...], gens, filt, stats: EnumerationStats, need_gens: bool):
    """Yield (child_adj, child_gens) for the canonical children of ``adj``."""
    q = len(adj)
    v = q
    deg = [row.bit_count() for row in adj]
    top = max(deg, default=0)
    bit_v = 1 << v
    for s in _subset_orbit_reps(q, gens, top):
        stats.graphs_visited += 1
        dv = s.bit_count()
        # degrees in the child
        tied = []
        ok = True
        for x in range(q):
            d = deg[x] + (s >> x & 1)
            if d > dv:
                ok = False
                break
            if d == dv:
                tied.append(x)
        if not ok:
            continue
        child = list(adj)
        for x in bits(s):
            child[x] |= bit_v
        child.append(s)
        if tied:
            cdeg = deg + [dv]
            for x in bits(s):
                cdeg[x] += 1
            gv = sum(cdeg[u] for u in bits(s))
            tied2 = []
            for x in tied:
                gx = sum(cdeg[u] for u in bits(child[x]))
                if gx > gv:
                    ok = False
                    break
                if gx == gv:
                    tied2.append(x)
            if not ok:
                continue
        else:
            tied2 = []
        if filt is not None and not filt(child, q + 1):
            continue
        child_t = tuple(child)
        child_gens = ()
        if tied2:
            lab = canonical_labelling(child_t)
            pos = lab.position
            orbit = orbit_ids(q + 1, lab.generators)
            w = min([v] + tied2, key=pos.__getitem__)
            if orbit[w] != orbit[v]:
                continue
            child_gens = lab.generators
        elif need_gens:
            child_gens = canonical_labelling(child_t).generators
        stats.graphs_after_filter += 1
        yield child_t, child_gens


def _descend(adj, gens, target, filt, stats, out):
    q = len(adj)
    stats.per_order[q] = stats.per_order.get(q, 0) + 1
    if q == target:
        out.append(adj)
        return
    need = q + 1 < target
    for child, cgens in _children(adj, gens, filt, stats, need):
        _descend(child, cgens, target, filt, stats, out)


def _subtree_job(args):
    adj, gens, target, filt = args
    stats = EnumerationStats()
    out: list[tuple[int, ...]] = []
    _descend(adj, gens, target, filt, stats, out)
    return out, stats


def _check_budget(p: int, max_order: int) -> None:
    if max_order > HARD_MAX_ORDER:
        raise BudgetExceeded(f"max_order {max_order} exceeds hard cap {HARD_MAX_ORDER}")
    if p > max_order:
        raise BudgetExceeded(f"order {p} exceeds the enumeration budget {max_order}")


def generate(
    p: int,
    filt: Filter | None = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    jobs: int = 1,
    stats: EnumerationStats | None = None,
) -> list[tuple[int, ...]]:
    """Adjacency tuples of one representative per class of order ``p`` passing ``filt``.

    With ``jobs > 1`` the augmentation tree is cut a few levels above ``p``
    and the subtrees are processed in worker processes; results are
    concatenated in subtree order, so the output equals the serial one.
    """
    _check_budget(p, max_order)
    if p < 0:
        raise ValueError("order must be nonnegative")
    stats = stats if stats is not None else EnumerationStats()
    stats.order = p
    t0 = time.perf_counter()
    root: tuple[int, ...] = ()
    out: list[tuple[int, ...]] = []
    if jobs <= 1 or p < 4:
        _descend(root, (), p, filt, stats, out)
    else:
        split = max(1, p - 3)
        frontier: list = []
        top = EnumerationStats()
        _collect_frontier(root, (), split, p, filt, top, frontier)
        stats.merge(top)
        # the frontier graphs are counted again inside the subtree jobs
        stats.per_order[split] -= len(frontier)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part, st in pool.map(_subtree_job, [(a, g, p, filt) for a, g in frontier]):
                out.extend(part)
                stats.merge(st)
    stats.elapsed = time.perf_counter() - t0
    return out


def _collect_frontier(adj, gens, split, target, filt, stats, frontier):
    q = len(adj)
    stats.per_order[q] = stats.per_order.get(q, 0) + 1
    if q == split:
        frontier.append((adj, gens))
        return
    for child, cgens in _children(adj, gens, filt, stats, True):
        _collect_frontier(child, cgens, split, target, filt, stats, frontier)


def enumerate_graphs(
    p: int,
    filt: Filter | None = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    jobs: int = 1,
    stats: EnumerationStats | None = None,
) -> Iterator[Graph]:
    """One :class:`Graph` per isomorphism class of order ``p`` passing ``filt``."""
    for adj in generate(p, filt, max_order=max_order, jobs=jobs, stats=stats):
        yield Graph._trusted(p, adj)


def level_counts(
    p: int,
    filt: Filter | None = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    stats: EnumerationStats | None = None,
) -> list[int]:
    """Number of classes passing ``filt`` at each order ``0..p``."""
    stats = stats if stats is not None else EnumerationStats()
    generate(p, filt, max_order=max_order, stats=stats)
    return [stats.per_order.get(q, 0) for q in range(p + 1)]


def first_empty_order(
    filt: Filter,
    p_max: int,
    *,
    stats: EnumerationStats | None = None,
) -> tuple[int | None, list[tuple[int, ...]]]:
    """Smallest order with no graph passing ``filt``, searching up to ``p_max``.

    Returns ``(order, survivors)`` where ``survivors`` are the passing graphs
    one order below; ``order`` is ``None`` when every order up to ``p_max``
    still has survivors (``survivors`` then holds the order-``p_max`` ones).
    """
    _check_budget(p_max, HARD_MAX_ORDER)
    stats = stats if stats is not None else EnumerationStats()
    t0 = time.perf_counter()
    level: list[tuple[tuple[int, ...], tuple]] = [((), ())]
    found = None
    for q in range(1, p_max + 1):
        nxt = []
        for adj, gens in level:
            nxt.extend(_children(adj, gens, filt, stats, True))
        stats.per_order[q] = len(nxt)
        if not nxt:
            found = q
            break
        level = nxt
    stats.order = found if found is not None else p_max
    stats.elapsed = time.perf_counter() - t0
    return found, [adj for adj, _ in level]
