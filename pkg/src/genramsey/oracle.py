"""Brute-force recomputation of extremal quantities over isomorph-free enumerations.

All searches run on *hereditary* families, so a quantity like the Ramsey
number becomes "the first order at which the family of counterexamples is
empty".  Counterexamples are searched in the complement orientation: a graph
H of order p defeats R(n, r; k, s) exactly when H is an (n, C(n,2) - r) graph
satisfying the (k, s) condition; its complement is the Definition-style
counterexample reported as the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .canon import canonical_labelling
from .closed_forms import RamseyQuery
from .enumeration import (
    DEFAULT_MAX_ORDER,
    AllOf,
    AlphaBelow,
    DegreeWindow,
    EnumerationStats,
    GirthAbove,
    KSFilter,
    MaxEdges,
    NMFilter,
    _check_budget,
    first_empty_order,
    generate,
)
from .graph import Graph, complement, complete_graph, has_sparse_subset
from .graph6 import encode

EXCEEDS_BUDGET = "exceeds budget"


@dataclass
class OracleVerdict:
    """``value`` is ``None`` when the search budget was exhausted."""

    value: int | None
    certificate: str | None = None
    stats: EnumerationStats = field(default_factory=EnumerationStats)
    quantity: str = ""
    params: dict = field(default_factory=dict)

    @property
    def exceeds_budget(self) -> bool:
        return self.value is None

    def as_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "params": self.params,
            "value": EXCEEDS_BUDGET if self.value is None else self.value,
            "certificate": self.certificate,
            "stats": self.stats.as_dict(),
        }


def canonical_g6(adj) -> str:
    return encode(Graph._trusted(len(adj), canonical_labelling(tuple(adj)).code))


def _smallest_certificate(graphs) -> str | None:
    best = None
    for adj in graphs:
        c = canonical_g6(adj)
        if best is None or c < best:
            best = c
    return best


def _complement_rows(adj) -> tuple[int, ...]:
    return complement(Graph._trusted(len(adj), tuple(adj))).adj


# ---------------------------------------------------------------------------
# e(n, m; p)


def brute_extremal_e(
    n: int, m: int, p: int, *, route: str = "auto", max_order: int = DEFAULT_MAX_ORDER, jobs: int = 1
) -> OracleVerdict:
    """Maximum edge count of an (n, m) graph of order p.

    ``route="direct"`` enumerates the (n, m) graphs themselves.
    ``route="complement"`` enumerates their complements, graphs whose
    n-subsets all induce >= C(n,2) - m edges, under a growing edge cap, and
    stops at the first cap that admits one; this is fast when m is close to
    C(n, 2).  ``auto`` picks by m.
    """
    if p < n:
        raise ValueError(f"need p >= n, got n={n}, p={p}")
    _check_budget(p, max_order)
    params = {"n": n, "m": m, "p": p}
    top = comb(n, 2)
    if m >= top:
        return OracleVerdict(comb(p, 2), canonical_g6(complete_graph(p).adj), EnumerationStats(order=p), "e(n,m;p)", params)
    if m < 0:
        return OracleVerdict(None, None, EnumerationStats(order=p), "e(n,m;p)", params)
    if route == "auto":
        route = "direct" if 2 * m <= top else "complement"
    stats = EnumerationStats()
    if route == "direct":
        graphs = generate(p, NMFilter(n, m), max_order=max_order, jobs=jobs, stats=stats)
        best = max(sum(r.bit_count() for r in adj) // 2 for adj in graphs)
        winners = [adj for adj in graphs if sum(r.bit_count() for r in adj) // 2 == best]
    elif route == "complement":
        cond = KSFilter(n, top - m)
        cap = 1
        while True:
            cap = min(cap, comb(p, 2))
            graphs = generate(p, AllOf(MaxEdges(cap), cond), max_order=max_order, jobs=jobs, stats=stats)
            if graphs or cap == comb(p, 2):
                break
            cap *= 2
        low = min(sum(r.bit_count() for r in adj) // 2 for adj in graphs)
        best = comb(p, 2) - low
        winners = [_complement_rows(adj) for adj in graphs if sum(r.bit_count() for r in adj) // 2 == low]
    else:
        raise ValueError(f"unknown route {route!r}")
    stats.order = p
    return OracleVerdict(best, _smallest_certificate(winners), stats, "e(n,m;p)", params)


def brute_alpha_min(n: int, m: int, p: int, *, max_order: int = DEFAULT_MAX_ORDER) -> OracleVerdict:
    """Minimum independence number over (n, m) graphs of order p."""
    if p < n:
        raise ValueError(f"need p >= n, got n={n}, p={p}")
    _check_budget(p, max_order)
    stats = EnumerationStats()
    params = {"n": n, "m": m, "p": p}
    nm = NMFilter(n, m)
    for a in range(1, p + 1):
        graphs = generate(p, AllOf(nm, AlphaBelow(a + 1)), max_order=max_order, stats=stats)
        if graphs:
            stats.order = p
            return OracleVerdict(a, _smallest_certificate(graphs), stats, "alpha_min(n,m;p)", params)
    # only reachable for m < 0, where no (n, m) graph of order >= n exists
    return OracleVerdict(None, None, stats, "alpha_min(n,m;p)", params)


def brute_girth_extremal(n: int, p: int, *, max_order: int = DEFAULT_MAX_ORDER) -> OracleVerdict:
    """Maximum edge count of a graph of order p with no cycle of length 3..n."""
    if not p >= n >= 3:
        raise ValueError(f"need p >= n >= 3, got n={n}, p={p}")
    _check_budget(p, max_order)
    stats = EnumerationStats()
    graphs = generate(p, GirthAbove(n), max_order=max_order, stats=stats)
    best = max(sum(r.bit_count() for r in adj) // 2 for adj in graphs)
    winners = [adj for adj in graphs if sum(r.bit_count() for r in adj) // 2 == best]
    return OracleVerdict(best, _smallest_certificate(winners), stats, "ex(p;C3..Cn)", {"n": n, "p": p})


# ---------------------------------------------------------------------------
# Generalized Ramsey numbers


def degree_prune_bounds(p: int, r_sub_k: int, r_sub_n: int) -> tuple[int, int]:
    """Degree window [p - R(n, r; k-1, s), R(n-1, r; k, s) - 1] for counterexamples of order p."""
    return max(0, p - r_sub_k), r_sub_n - 1


class _CountingWindow(DegreeWindow):
    def __init__(self, target, lo, hi):
        super().__init__(target, lo, hi)
        self.rejected = 0

    def __call__(self, adj, q):
        ok = super().__call__(adj, q)
        if not ok:
            self.rejected += 1
        return ok


def counterexample_filter(n: int, r: int, k: int, s: int):
    """Hereditary filter for graphs H whose complement defeats both clauses at (n, r; k, s)."""
    ks = AlphaBelow(k) if s == 1 else KSFilter(k, s)
    return AllOf(NMFilter(n, comb(n, 2) - r), ks)


def brute_generalized_ramsey(
    q: RamseyQuery,
    p_max: int = DEFAULT_MAX_ORDER,
    *,
    route: str = "direct",
    sub_values: tuple[int, int] | None = None,
) -> OracleVerdict:
    """R(n, r; k, s) by exhaustive search up to order ``p_max``.

    ``route="direct"`` grows counterexamples level by level and returns the
    first empty level.  ``route="alpha_min"`` (s = 1 only) returns the least
    p with ``brute_alpha_min(n, r*, p) >= k``, orders below n counting as
    vacuously (n, r*).  ``sub_values = (R(n-1, r; k, s), R(n, r; k-1, s))``,
    when known exactly, enables degree pruning of counterexamples.
    """
    _check_budget(p_max, p_max)
    params = {"n": q.n, "r": q.r, "k": q.k, "s": q.s, "r_star": q.r_star, "p_max": p_max}
    if route == "alpha_min":
        return _ramsey_via_alpha_min(q, p_max, params)
    if route != "direct":
        raise ValueError(f"unknown route {route!r}")
    filt = counterexample_filter(q.n, q.r, q.k, q.s)
    stats = EnumerationStats()
    if sub_values is None:
        found, survivors = first_empty_order(filt, p_max, stats=stats)
        cert = None
        if found is not None:
            cert = _smallest_certificate(_complement_rows(a) for a in survivors)
        return OracleVerdict(found, cert, stats, "R(n,r;k,s)", params)
    return _ramsey_pruned(q, p_max, sub_values, filt, stats, params)


def _ramsey_pruned(q, p_max, sub_values, filt, stats, params):
    r_sub_n, r_sub_k = sub_values
    if not (q.r < comb(q.n, 2) and q.s < comb(q.k, 2)):
        raise ValueError("degree pruning needs r < C(n,2) and s < C(k,2)")
    floor_order = max(q.n, q.k)
    previous = None
    for p in range(1, p_max + 1):
        if p < floor_order:
            level = generate(p, filt, max_order=p_max, stats=stats)
        else:
            lo, hi = degree_prune_bounds(p, r_sub_k, r_sub_n)
            window = _CountingWindow(p, lo, hi)
            # every partial graph is itself a smaller counterexample, so the
            # window never rejects what the filter would keep; it runs first
            # only because it is much cheaper than the subset search
            level = generate(p, AllOf(window, filt), max_order=p_max, stats=stats)
            stats.pruned_by_degree_bounds += window.rejected
        if not level:
            stats.order = p
            cert = _smallest_certificate(_complement_rows(a) for a in previous)
            return OracleVerdict(p, cert, stats, "R(n,r;k,s)", params)
        previous = level
    stats.order = p_max
    return OracleVerdict(None, None, stats, "R(n,r;k,s)", params)


def _ramsey_via_alpha_min(q: RamseyQuery, p_max: int, params: dict) -> OracleVerdict:
    if q.s != 1:
        raise ValueError("the alpha_min route applies to s = 1 only")
    stats = EnumerationStats()
    for p in range(1, p_max + 1):
        if p < q.n:
            # every graph of order < n is vacuously (n, r*); K_p has alpha 1 < k
            continue
        v = brute_alpha_min(q.n, q.r_star, p, max_order=p_max)
        stats.merge(v.stats)
        if v.value is not None and v.value >= q.k:
            stats.order = p
            prev = _largest_alpha_deficient(q, p - 1, p_max)
            return OracleVerdict(p, prev, stats, "R(n,r;k,s)", params)
    stats.order = p_max
    return OracleVerdict(None, None, stats, "R(n,r;k,s)", params)


def _largest_alpha_deficient(q: RamseyQuery, p: int, p_max: int) -> str | None:
    graphs = generate(p, counterexample_filter(q.n, q.r, q.k, 1), max_order=p_max)
    return _smallest_certificate(_complement_rows(a) for a in graphs)


def defeats_definition(g: Graph, q: RamseyQuery) -> bool:
    """True iff ``g`` has no n-set inducing <= r-1 edges and its complement no k-set inducing <= s-1 edges."""
    if g.order >= q.n and has_sparse_subset(g.adj, g.order, q.n, q.r - 1):
        return False
    h = complement(g)
    if h.order >= q.k and has_sparse_subset(h.adj, h.order, q.k, q.s - 1):
        return False
    return True
