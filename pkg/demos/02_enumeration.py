"""
Isomorph-free enumeration
=========================

Graphs are grown one vertex at a time and each isomorphism class is produced
exactly once.  Hereditary filters prune whole subtrees of the search.
"""

# %%
import time

from genramsey.canon import canonical_certificate
from genramsey.enumeration import AlphaBelow, GirthAbove, NMFilter, generate
from genramsey.graph import Graph

# %%
# Number of graphs on p vertices.
for p in range(1, 9):
    t0 = time.perf_counter()
    count = len(generate(p))
    print(f"p={p}: {count:>6} classes  ({time.perf_counter() - t0:.2f} s)")

# %%
# Filters: triangle-free graphs, graphs with no independent triple, and
# (5, 3) graphs, whose 5-subsets all span at most 3 edges.
print("triangle-free, p=7:", len(generate(7, GirthAbove(3))))
print("alpha <= 2, p=7:  ", len(generate(7, AlphaBelow(3))))
print("(5,3) graphs, p=8:", len(generate(8, NMFilter(5, 3))))

# %%
# Canonical certificates identify classes regardless of labelling.
g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
h = g.relabel([3, 0, 4, 1, 2])
print(canonical_certificate(g), canonical_certificate(h), canonical_certificate(g) == canonical_certificate(h))
