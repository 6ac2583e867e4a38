"""
Checking the independence bounds on every small graph
=====================================================

Each bound says: fewer than T edges forces an independent set (or a sparse
induced subgraph) of a given size.  Here every bound is evaluated on every
graph of order at most 8.
"""

# %%
from genramsey.bounds import alpha_bound_cor22, alpha_bound_thm23, alpha_bound_thm24
from genramsey.enumeration import generate
from genramsey.soundness import SoundnessTally, check_graphs

# %%
for p, t in [(9, 0), (13, 1), (7, 1)]:
    print("cor2.2", (p, t), alpha_bound_cor22(p, t))
    print("thm2.3", (p, t), alpha_bound_thm23(p, t))
print("thm2.4", (7, 5, 3), alpha_bound_thm24(7, 5, 3))

# %%
tally = SoundnessTally()
for p in range(1, 9):
    check_graphs(generate(p), tally)
print(f"{tally.graphs} graphs, {tally.pairs_checked} applicable (graph, bound) pairs, "
      f"{len(tally.violations)} violations")
for name, count in sorted(tally.by_theorem.items()):
    print(f"  {name:<12} {count}")
