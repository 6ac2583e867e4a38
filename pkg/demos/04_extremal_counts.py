"""
Extremal edge counts of (n, m) graphs
=====================================

e(n, m; p) is the most edges a graph on p vertices can have when every n
vertices span at most m edges.  Two families have closed forms: m = n - 2,
and m = C(n,2) - m' with n >= 2m' (a Turán number).
"""

# %%
from math import comb

from genramsey.closed_forms import extremal_sparse, turan_count
from genramsey.oracle import brute_extremal_e, brute_girth_extremal

# %%
print("m = n - 2")
for n in (4, 5):
    print(f"  n={n}:", [(p, extremal_sparse(n, p), brute_extremal_e(n, n - 2, p).value) for p in range(n, 9)])

# %%
print("Turán family")
for n, deficit in [(4, 2), (5, 2), (6, 3)]:
    row = [(p, turan_count(n - deficit, p), brute_extremal_e(n, comb(n, 2) - deficit, p).value) for p in range(n, 9)]
    print(f"  n={n} m'={deficit}:", row)

# %%
# m = n - 1 has no closed form here; it equals the most edges without
# cycles of length 3..n, which a second search confirms.
for n in (3, 4, 5):
    print(f"n={n}:", [(p, brute_extremal_e(n, n - 1, p).value, brute_girth_extremal(n, p).value) for p in range(n, 9)])
