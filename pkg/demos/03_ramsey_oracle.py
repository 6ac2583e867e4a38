"""
Ramsey numbers by exhaustive search
===================================

The oracle grows every graph that still defeats both clauses of the
definition and reports the first order where none survive.  The survivors
one order below are the critical graphs; the smallest is returned in graph6.
"""

# %%
from genramsey.canon import are_isomorphic
from genramsey.closed_forms import RamseyQuery, generalized_ramsey_closed
from genramsey.graph import cycle_graph
from genramsey.graph6 import decode
from genramsey.oracle import brute_generalized_ramsey

# %%
# Classical values: R(3,3) = 6 with the 5-cycle as the critical graph.
v = brute_generalized_ramsey(RamseyQuery(3, 1, 3, 1))
print("R(3,3) =", v.value, "certificate", v.certificate, "is C5:", are_isomorphic(decode(v.certificate), cycle_graph(5)))
v = brute_generalized_ramsey(RamseyQuery(3, 1, 4, 1))
print("R(3,4) =", v.value, "certificate", v.certificate, v.stats.as_dict())

# %%
# The closed formula against the search, in the deficiency convention.
for n, r_star, k in [(4, 1, 5), (5, 2, 4), (6, 4, 4), (4, 2, 5)]:
    q = RamseyQuery.from_deficiency(n, r_star, k)
    print(f"n={n} r*={r_star} k={k}: formula {generalized_ramsey_closed(n, r_star, k)}, "
          f"search {brute_generalized_ramsey(q).value}")

# %%
# Beyond the budget the answer is an honest "exceeds budget".
print("R(3,5) up to order 10:", brute_generalized_ramsey(RamseyQuery(3, 1, 5, 1), 10).as_dict()["value"])

# %%
# s > 1 has no closed form, but small cases are quick.
for s in (1, 2, 3):
    print(f"R(3, 1; 4, {s}) =", brute_generalized_ramsey(RamseyQuery(3, 1, 4, s)).value)

# %%
# Known values one step down, R(2, 1; 4, 1) = 4 and R(3, 1; 3, 1) = 6, bound
# the degrees of any counterexample and let the search skip partial graphs
# early.  The answer is unchanged.
v = brute_generalized_ramsey(RamseyQuery(3, 1, 4, 1), sub_values=(4, 6))
print("R(3,4) with degree pruning =", v.value, "pruned:", v.stats.pruned_by_degree_bounds)
