"""Exhaustive soundness checking of the edge-threshold and (n, m)-graph bounds.

For one graph, every theorem instance whose hypothesis the graph satisfies is
checked against the graph's exact independence number and induced-edge
extrema.  A violation would be a counterexample to the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import bounds
from .graph import _alpha


TRIVIAL_THM22 = "thm2.2[k=1]"


@dataclass
class SoundnessTally:
    pairs_checked: int = 0
    graphs: int = 0
    violations: list[tuple] = field(default_factory=list)
    by_theorem: dict[str, int] = field(default_factory=dict)

    def add(self, name: str) -> None:
        self.pairs_checked += 1
        self.by_theorem[name] = self.by_theorem.get(name, 0) + 1

    @property
    def nontrivial_pairs(self) -> int:
        return self.pairs_checked - self.by_theorem.get(TRIVIAL_THM22, 0)

    def merge(self, other: "SoundnessTally") -> None:
        self.pairs_checked += other.pairs_checked
        self.graphs += other.graphs
        self.violations.extend(other.violations)
        for k, v in other.by_theorem.items():
            self.by_theorem[k] = self.by_theorem.get(k, 0) + v


@lru_cache(maxsize=None)
def threshold_instances(p: int) -> tuple[tuple[str, tuple, bounds.BoundResult], ...]:
    """Every applicable edge-threshold bound at order p."""
    out = []
    for k in range(1, p):
        for n in range(k + 1, p + 1):
            out.append(("thm2.2", (p, k, n), bounds.threshold_thm22(p, k, n)))
    if p >= 4:
        for t in range(0, p + 1):
            res = bounds.alpha_bound_cor22(p, t)
            if res.applicable:
                out.append(("cor2.2", (p, t), res))
            res = bounds.alpha_bound_thm23(p, t)
            if res.applicable:
                out.append(("thm2.3", (p, t), res))
        for variant, lo in (("t0", 9), ("t1", 5), ("t2", 4)):
            if p >= lo:
                out.append((f"cor2.{3 + int(variant[1])}", (p, variant), bounds.alpha_bound_cor_2_3_4_5(p, variant)))
    for n in range(1, p + 1):
        for t in range(1, (n + 4) // 2 + 1):
            if p > n + 7 - 2 * t:
                out.append(("thm2.4", (p, n, t), bounds.alpha_bound_thm24(p, n, t)))
    return tuple(out)


@lru_cache(maxsize=None)
def nm_instances(p: int) -> tuple[tuple[str, tuple, int, int, int], ...]:
    """(name, params, n, m, alpha bound) for the (n, m)-graph theorems at order p."""
    out = []
    for n in range(4, p + 1):
        for m in range(1, (n - 2) // 2 + 1):
            out.append(("thm3.1", (p, n, m), n, m, bounds.alpha_lb_thm31(p, n, m)))
        for t in range(2, (n + 4) // 2 + 1):
            out.append(("thm3.2", (p, n, t), n, n - t, bounds.alpha_lb_thm32(p, n, t)))
    return tuple(out)


def induced_extrema_by_size(adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Min and max induced edge count for every subset size, by a pass over all subsets."""
    p = len(adj)
    full = 1 << p
    edges = [0] * full
    size = [0] * full
    lo = [10 ** 9] * (p + 1)
    hi = [-1] * (p + 1)
    lo[0] = hi[0] = 0
    for s in range(1, full):
        low = s & -s
        rest = s ^ low
        e = edges[rest] + (adj[low.bit_length() - 1] & rest).bit_count()
        z = size[rest] + 1
        edges[s] = e
        size[s] = z
        if e < lo[z]:
            lo[z] = e
        if e > hi[z]:
            hi[z] = e
    return lo, hi


def check_graph(adj: Sequence[int], tally: SoundnessTally) -> None:
    p = len(adj)
    e = sum(row.bit_count() for row in adj) // 2
    a = _alpha(adj, (1 << p) - 1)
    extrema = None
    tally.graphs += 1
    for name, params, res in threshold_instances(p):
        if e >= res.edge_threshold:
            continue
        # k = 1 only asserts that G is not complete; tallied apart
        tally.add(TRIVIAL_THM22 if name == "thm2.2" and params[1] == 1 else name)
        if res.kind is bounds.BoundKind.SPARSE_SUBGRAPH:
            if extrema is None:
                extrema = induced_extrema_by_size(adj)
            ok = extrema[0][res.subset_size] <= res.conclusion
        else:
            ok = a >= res.conclusion
        if not ok:
            tally.violations.append((name, params, tuple(adj)))
    for name, params, n, m, bound in nm_instances(p):
        # averaging over n-subsets: e * n(n-1) <= m * p(p-1) for an (n, m) graph
        if e * n * (n - 1) > m * p * (p - 1):
            continue
        if extrema is None:
            extrema = induced_extrema_by_size(adj)
        if extrema[1][n] > m:
            continue
        tally.add(name)
        if a < bound:
            tally.violations.append((name, params, tuple(adj)))


def check_graphs(graphs: Iterable[Sequence[int]], tally: SoundnessTally | None = None) -> SoundnessTally:
    tally = tally if tally is not None else SoundnessTally()
    for adj in graphs:
        check_graph(adj, tally)
    return tally


def max_threshold(p: int, *, skip_trivial: bool = True) -> int:
    """Largest edge threshold at order p, ignoring the k = 1 instances of the
    sparse-subgraph bound (whose conclusion only says G is not complete)."""
    best = 0
    for name, params, res in threshold_instances(p):
        if skip_trivial and name == "thm2.2" and params[1] == 1:
            continue
        best = max(best, res.edge_threshold)
    return best
