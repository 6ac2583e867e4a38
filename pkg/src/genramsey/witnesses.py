"""Lower-bound graphs for R(n, C(n,2) - r; k, 1).

A witness is a disjoint union of cliques, each stored only by its size.  A
witness of order R - 1 that is an (n, r) graph with independence number at
most k - 1 shows the Ramsey number exceeds its order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import closed_forms
from .graph import Graph, complete_graph, complete_multipartite, disjoint_union, independence_number, is_nm_graph


@dataclass(frozen=True)
class Witness:
    component_sizes: tuple[int, ...]
    n: int
    r: int
    k: int
    case: str = ""

    def __post_init__(self):
        sizes = tuple(sorted(self.component_sizes, reverse=True))
        if any(c < 1 for c in sizes):
            raise ValueError("component sizes must be >= 1")
        if sum(sizes) > 64:
            raise ValueError("witness order exceeds 64")
        object.__setattr__(self, "component_sizes", sizes)

    @property
    def order(self) -> int:
        return sum(self.component_sizes)

    @property
    def alpha(self) -> int:
        return len(self.component_sizes)

    def realize(self) -> Graph:
        """The graph, numbered component by component in decreasing size."""
        return disjoint_union([complete_graph(c) for c in self.component_sizes])

    def label(self) -> str:
        """Compact name such as ``K3 + 2K2 + K1`` (``3K2`` for three disjoint edges)."""
        counts = Counter(self.component_sizes)
        parts = []
        for size in sorted(counts, reverse=True):
            c = counts[size]
            parts.append(f"{c if c > 1 else ''}K{size}")
        return " + ".join(parts) if parts else "K0"


def witness_matching(n: int, r: int, k: int) -> Witness:
    """rK_2 ∪ (k-r-1)K_1, valid when 2r <= n - 2 and k + r > n."""
    if not (1 <= r and 2 * r <= n - 2 and k + r > n and k > r):
        raise ValueError(f"matching witness needs 2r <= n-2, k+r > n, k > r; got n={n}, r={r}, k={k}")
    return Witness((2,) * r + (1,) * (k - r - 1), n, r, k, "matching")


def witness_triangles(n: int, r: int, k: int) -> Witness:
    """aK_3 ∪ (k-1-a)K_2 with a = floor((2r+1-n)/3), valid when 2r >= n-1 and r > 2n-3k+2."""
    if not (2 * r >= n - 1 and r > 2 * n - 3 * k + 2 and r <= n - 2 and k >= 2):
        raise ValueError(
            f"triangle witness needs n-1 <= 2r, r <= n-2, r > 2n-3k+2; got n={n}, r={r}, k={k}"
        )
    a = (2 * r + 1 - n) // 3
    assert 0 <= a < k - 1, (n, r, k, a)
    return Witness((3,) * a + (2,) * (k - 1 - a), n, r, k, "triangles")


def witness_trivial_order(n: int, k: int, r: int = 1) -> Witness:
    """K_{n-1}: too small to hold n vertices, and alpha = 1 <= k - 1."""
    if n < 4 or k < 2:
        raise ValueError(f"need n >= 4 and k >= 2, got n={n}, k={k}")
    return Witness((n - 1,), n, r, k, "trivial")


def active_case(n: int, r: int, k: int) -> str:
    """Which construction attains the formula: matching, triangles or trivial."""
    closed_forms._check_main_domain(n, r, k)
    if closed_forms.is_matching_case(n, r):
        return "matching" if k + r > n else "trivial"
    return "triangles" if r > 2 * n - 3 * k + 2 else "trivial"


def best_witness(n: int, r: int, k: int) -> Witness:
    case = active_case(n, r, k)
    if case == "matching":
        return witness_matching(n, r, k)
    if case == "triangles":
        return witness_triangles(n, r, k)
    return witness_trivial_order(n, k, r)


def turan_graph(p: int, k: int) -> Graph:
    """Balanced complete k-partite graph on p vertices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if p < 0:
        raise ValueError("p must be >= 0")
    q, p0 = divmod(p, k)
    sizes = [q + 1] * p0 + [q] * (k - p0)
    return complete_multipartite([s for s in sizes if s])


@dataclass
class WitnessReport:
    witness: Witness
    expected_order: int
    order_ok: bool
    nm_ok: bool
    alpha: int
    alpha_ok: bool
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.order_ok and self.nm_ok and self.alpha_ok

    def as_dict(self) -> dict:
        return {
            "witness": self.witness.label(),
            "order": self.witness.order,
            "expected_order": self.expected_order,
            "order_ok": self.order_ok,
            "nm_ok": self.nm_ok,
            "alpha": self.alpha,
            "alpha_ok": self.alpha_ok,
            "passed": self.passed,
        }


def verify_witness(w: Witness) -> WitnessReport:
    """Check order = formula - 1, the (n, r) property and alpha <= k - 1 on the realized graph."""
    expected = closed_forms.generalized_ramsey_closed(w.n, w.r, w.k) - 1
    g = w.realize()
    notes = []
    if g.order < w.n:
        nm_ok = True
        notes.append("order below n: (n, r) property holds vacuously")
    else:
        nm_ok = is_nm_graph(g, w.n, w.r)
    alpha = independence_number(g)
    return WitnessReport(w, expected, g.order == expected, nm_ok, alpha, alpha <= w.k - 1, notes)
