"""Exact computation and exhaustive verification of generalized Ramsey numbers
R(n, r; k, s) and Turán-type extremal edge counts."""

__version__ = "0.1.0"

from .closed_forms import (  # noqa: E402
    RamseyQuery,
    corollary_r_eq_n_minus_2,
    extremal_dirac,
    extremal_recursion_bound,
    extremal_sparse,
    generalized_ramsey_closed,
    max_edges_clique_free,
    ramsey_recursive_bound,
    turan_count,
)
from .graph import Graph, complement, disjoint_union, independence_number  # noqa: E402
from .graph6 import decode as graph6_decode, encode as graph6_encode  # noqa: E402
from .canon import canonical_certificate  # noqa: E402
