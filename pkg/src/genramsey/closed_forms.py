"""Exact integer evaluators for Turán counts, extremal edge counts and the
closed formula for R(n, C(n,2) - r; k, 1)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class RamseyQuery:
    """Parameters of R(n, r; k, s).

    ``r`` is the edge budget of the first clause (an ``n``-set inducing at
    most ``r - 1`` edges).  ``r_star = C(n, 2) - r`` is the deficiency form
    used by the closed formula, where the question becomes: does every
    (n, r_star) graph of order p have an independent set of size k?
    """

    n: int
    r: int
    k: int
    s: int = 1

    def __post_init__(self):
        if self.n < 2 or self.k < 2:
            raise ValueError("need n, k >= 2")
        if not 1 <= self.r <= comb(self.n, 2):
            raise ValueError(f"r={self.r} must lie in [1, C(n,2)={comb(self.n, 2)}]")
        if not 1 <= self.s <= comb(self.k, 2):
            raise ValueError(f"s={self.s} must lie in [1, C(k,2)={comb(self.k, 2)}]")

    @property
    def r_star(self) -> int:
        return comb(self.n, 2) - self.r

    @classmethod
    def from_deficiency(cls, n: int, r_star: int, k: int, s: int = 1) -> "RamseyQuery":
        return cls(n, comb(n, 2) - r_star, k, s)


@dataclass(frozen=True)
class TuranParams:
    k: int
    p: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("number of parts k must be >= 1")
        if self.p < 0:
            raise ValueError("order p must be >= 0")

    @property
    def p0(self) -> int:
        return self.p % self.k


def turan_count(k: int, p: int) -> int:
    """t_k(p): edges of the balanced complete k-partite graph on p vertices.

    Computed as (k-1)(p^2 - p0^2) / (2k) + (p0^2 - p0) / 2; p^2 - p0^2 is a
    multiple of k and the quotient times (k-1) is even, so both divisions are exact.
    """
    p0 = TuranParams(k, p).p0
    num = (k - 1) * (p * p - p0 * p0)
    assert num % (2 * k) == 0
    return num // (2 * k) + (p0 * p0 - p0) // 2


def max_edges_clique_free(p: int, k: int) -> int:
    """ex(p; K_k) = t_{k-1}(p) (Turán's theorem)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if p < 1:
        raise ValueError("p must be >= 1")
    return turan_count(k - 1, p)


def extremal_recursion_bound(e_prev: int, p: int) -> int:
    """floor(p * e_prev / (p - 2)): bound on ex(p; L) from ex(p - 1; L) = e_prev."""
    if p <= 2:
        raise ValueError("p must exceed 2")
    if e_prev < 0:
        raise ValueError("e_prev must be nonnegative")
    return p * e_prev // (p - 2)


def extremal_sparse(n: int, p: int) -> int:
    """e(n, n-2; p) = floor((n-2) p / (n-1))."""
    if n < 3 or p < n:
        raise ValueError(f"need p >= n >= 3, got n={n}, p={p}")
    return (n - 2) * p // (n - 1)


def extremal_dirac(n: int, m: int, p: int) -> int:
    """e(n, C(n,2) - m; p) = t_{n-m}(p) for p >= n >= 2m >= 2."""
    if not (m >= 1 and p >= n >= 2 * m):
        raise ValueError(f"need p >= n >= 2m >= 2, got n={n}, m={m}, p={p}")
    return turan_count(n - m, p)


def _check_main_domain(n: int, r: int, k: int) -> None:
    if n < 4:
        raise ValueError(f"formula needs n >= 4, got {n}")
    if k < 2:
        raise ValueError(f"formula needs k >= 2, got {k}")
    if not 1 <= r <= n - 2:
        raise ValueError(f"formula needs 1 <= r <= n-2, got r={r}, n={n}")


def is_matching_case(n: int, r: int) -> bool:
    """The first case r <= n/2 - 1, tested exactly as 2r <= n - 2."""
    return 2 * r <= n - 2


def generalized_ramsey_closed(n: int, r: int, k: int) -> int:
    """R(n, C(n,2) - r; k, 1) for n >= 4, 1 <= r <= n - 2, k >= 2.

    ``r`` is the deficiency: the value is the least p such that every graph
    of order p whose n-subsets each induce at most r edges has an independent
    set of size k.
    """
    _check_main_domain(n, r, k)
    if is_matching_case(n, r):
        return max(n, k + r)
    return max(n, 2 * k - 2 + (2 * r + 4 - n) // 3)


def corollary_r_eq_n_minus_2(n: int, k: int) -> int:
    """R(n, C(n,2) - n + 2; k, 1): n if n >= 3k - 4, else 2k - 2 + floor(n/3)."""
    if n < 4 or k < 2:
        raise ValueError(f"need n >= 4 and k >= 2, got n={n}, k={k}")
    if n >= 3 * k - 4:
        return n
    return 2 * k - 2 + n // 3


def ramsey_recursive_bound(r_n_minus_1: int, r_k_minus_1: int) -> tuple[int, bool]:
    """Upper bound R(n-1, r; k, s) + R(n, r; k-1, s) on R(n, r; k, s).

    The flag is true when both inputs are even, in which case the bound is strict.
    """
    if r_n_minus_1 < 2 or r_k_minus_1 < 2:
        raise ValueError("sub-values must be >= 2")
    return r_n_minus_1 + r_k_minus_1, r_n_minus_1 % 2 == 0 and r_k_minus_1 % 2 == 0
