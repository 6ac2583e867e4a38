"""
The closed formula and its witness graphs
=========================================

R(n, C(n,2) - r; k, 1) has a closed form for n >= 4 and 1 <= r <= n - 2.
Every value comes with a graph one vertex short of it, a disjoint union of
small cliques, that shows the value cannot be any smaller.
"""

# %%
from genramsey.closed_forms import generalized_ramsey_closed
from genramsey.graph6 import encode
from genramsey.witnesses import active_case, best_witness, verify_witness

# %%
# A small table for n = 6.  Rows are the deficiency r, columns k.
n = 6
print("r\\k " + "".join(f"{k:>4}" for k in range(2, 9)))
for r in range(1, n - 1):
    print(f"{r:>3} " + "".join(f"{generalized_ramsey_closed(n, r, k):>4}" for k in range(2, 9)))

# %%
# Each cell is attained by one of three constructions.
for r, k in [(2, 6), (3, 4), (4, 4), (1, 3)]:
    w = best_witness(n, r, k)
    rep = verify_witness(w)
    print(f"n={n} r={r} k={k}: {active_case(n, r, k):<9} {w.label():<14} order {w.order}"
          f"  graph6 {encode(w.realize()):<8} verified={rep.passed}")

# %%
# The verifier really checks something: a witness with the wrong order fails.
from genramsey.witnesses import Witness

print(verify_witness(Witness((2, 2, 2, 2), 5, 2, 4)).as_dict())
