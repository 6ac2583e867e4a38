"""Edge-count thresholds that force large independent sets or sparse
induced subgraphs, and independence lower bounds for (n, m) graphs.

Every fractional part {x/3} or {x/2} is carried as its integer residue and
every inequality is cleared of denominators before comparing, so boundary
cases are decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class BoundKind(str, Enum):
    ALPHA_LOWER_BOUND = "alphaLowerBound"
    SPARSE_SUBGRAPH = "sparseSubgraph"


@dataclass(frozen=True)
class BoundResult:
    """Outcome of evaluating one theorem at fixed parameters.

    If ``applicable``, every graph of order p with ``e(G) < edge_threshold``
    satisfies the conclusion: ``alpha(G) >= conclusion`` for
    ``ALPHA_LOWER_BOUND``; for ``SPARSE_SUBGRAPH``, some ``subset_size``
    vertices induce at most ``conclusion`` edges.
    """

    applicable: bool
    edge_threshold: int
    conclusion: int
    kind: BoundKind
    subset_size: int | None = None

    def holds_for(self, edges: int, alpha: int | None = None, min_induced: int | None = None) -> bool:
        """Check one graph against the bound; vacuously true off the hypothesis."""
        if not self.applicable or edges >= self.edge_threshold:
            return True
        if self.kind is BoundKind.ALPHA_LOWER_BOUND:
            return alpha >= self.conclusion
        return min_induced <= self.conclusion

    def hypothesis(self, edges: int) -> bool:
        return self.applicable and edges < self.edge_threshold


_NOT_APPLICABLE = BoundResult(False, 0, 0, BoundKind.ALPHA_LOWER_BOUND)


def threshold_thm22(p: int, k: int, n: int) -> BoundResult:
    """Few edges force n vertices inducing at most floor(n/k)(n - (floor(n/k)+1)k/2) - 1 edges."""
    if k < 1 or not p >= n > k:
        raise ValueError(f"need p >= n > k >= 1, got p={p}, n={n}, k={k}")
    s = p // k
    threshold = s * p - s * (s + 1) // 2 * k
    q = n // k
    conclusion = q * n - q * (q + 1) // 2 * k - 1
    return BoundResult(True, threshold, conclusion, BoundKind.SPARSE_SUBGRAPH, n)


def alpha_bound_cor22(p: int, t: int) -> BoundResult:
    """alpha >= floor((p-t)/3) + 1 when e < p + 2t + 6{(p-t)/3} and t < p/4 - 3{(p-t)/3}."""
    if p < 4 or t < 0:
        raise ValueError(f"need p >= 4 and t >= 0, got p={p}, t={t}")
    rho = (p - t) % 3
    # t < p/4 - rho  <=>  4t < p - 4 rho
    if not 4 * t < p - 4 * rho:
        return _NOT_APPLICABLE
    return BoundResult(True, p + 2 * t + 2 * rho, (p - t) // 3 + 1, BoundKind.ALPHA_LOWER_BOUND)


def alpha_bound_thm23(p: int, t: int) -> BoundResult:
    """alpha >= floor((p+t)/3) + 1 when e < p - 2t + 3{(p+t)/3} + max(t, 3{(p+t)/3})."""
    if p < 4 or t < 0:
        raise ValueError(f"need p >= 4 and t >= 0, got p={p}, t={t}")
    rho = (p + t) % 3
    # rho - p/4 < t <= p/2 + rho
    if not (4 * rho - p < 4 * t and 2 * t <= p + 2 * rho):
        return _NOT_APPLICABLE
    threshold = p - 2 * t + rho + max(t, rho)
    return BoundResult(True, threshold, (p + t) // 3 + 1, BoundKind.ALPHA_LOWER_BOUND)


_VARIANT_MIN_ORDER = {"t0": 9, "t1": 5, "t2": 4}


def alpha_bound_cor_2_3_4_5(p: int, variant: str) -> BoundResult:
    """The t = 0, 1, 2 specialisations, with thresholds written per residue of p mod 3."""
    if variant not in _VARIANT_MIN_ORDER:
        raise ValueError(f"variant must be one of {sorted(_VARIANT_MIN_ORDER)}")
    if p < _VARIANT_MIN_ORDER[variant]:
        raise ValueError(f"variant {variant} needs p >= {_VARIANT_MIN_ORDER[variant]}, got {p}")
    res = p % 3
    if variant == "t0":
        threshold = p + 2 * res
        conclusion = p // 3 + 1
    elif variant == "t1":
        threshold = (p, p + 2, p - 1)[res]
        conclusion = (p + 1) // 3 + 1
    else:
        threshold = (p, p - 2, p - 1)[res]
        conclusion = (p + 2) // 3 + 1
    return BoundResult(True, threshold, conclusion, BoundKind.ALPHA_LOWER_BOUND)


def alpha_bound_thm24(p: int, n: int, t: int) -> BoundResult:
    """alpha >= floor((p - floor((n+4-2t)/3))/2) + 1 when 2e < p + n + 2 - 2t.

    The stored integer threshold is ceil((p+n)/2) + 1 - t, equivalent to the
    cleared inequality for integer edge counts.
    """
    if n < 1 or t < 1 or not 2 * t <= n + 4 or not p > n + 7 - 2 * t:
        raise ValueError(f"need t <= n/2 + 2 and p > n + 7 - 2t, got p={p}, n={n}, t={t}")
    threshold = (p + n + 1) // 2 + 1 - t
    conclusion = (p - (n + 4 - 2 * t) // 3) // 2 + 1
    return BoundResult(True, threshold, conclusion, BoundKind.ALPHA_LOWER_BOUND)


def alpha_lb_thm31(p: int, n: int, m: int) -> int:
    """Every (n, m) graph of order p with m <= n/2 - 1 has alpha >= p - m."""
    if not (p >= n >= 4 and m >= 1 and 2 * m <= n - 2):
        raise ValueError(f"need p >= n >= 4 and 1 <= m <= n/2 - 1, got p={p}, n={n}, m={m}")
    return p - m


def alpha_lb_thm32(p: int, n: int, t: int) -> int:
    """Every (n, n-t) graph of order p has alpha >= floor((p - floor((n+4-2t)/3))/2) + 1."""
    if not (p >= n >= 4 and t >= 2 and 2 * t <= n + 4):
        raise ValueError(f"need 2 <= t <= n/2 + 2 and p >= n >= 4, got p={p}, n={n}, t={t}")
    return (p - (n + 4 - 2 * t) // 3) // 2 + 1
