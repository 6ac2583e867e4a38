"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the vertex partition to an
equitable one, individualise each vertex of the first non-singleton cell in
turn, recurse.  Each leaf is a discrete ordered partition, i.e. a labelling,
and the canonical form is the labelled graph with the largest adjacency code.
Two leaves with equal codes differ by an automorphism; these are recorded and
used to prune sibling branches and to jump back to the point where the two
leaves' paths diverge.  Leaves are always compared with the first leaf, which
guarantees the recorded automorphisms generate the full group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits


@dataclass(frozen=True)
class Labelling:
    """Result of :func:`canonical_labelling`.

    ``lab[i]`` is the vertex placed at canonical position ``i``; ``code`` holds
    the canonical adjacency rows; ``generators`` generate the automorphism group.
    """

    lab: tuple[int, ...]
    code: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos

    def orbits(self) -> list[int]:
        return orbit_ids(len(self.lab), self.generators)


def orbit_ids(n: int, generators) -> list[int]:
    """Orbit representative (smallest vertex) of each vertex under ``generators``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable w.r.t. ``splitters``.

    Each cell is split by the number of neighbours in the splitter; the
    fragments keep the cell's place, ordered by increasing count, and every
    fragment is queued as a new splitter.
    """
    n = len(adj)
    i = 0
    while i < len(splitters) and len(cells) < n:
        w = splitters[i]
        i += 1
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            c0 = counts[0]
            for c in counts:
                if c != c0:
                    break
            else:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                mask = 0
                for v in frag:
                    mask |= 1 << v
                splitters.append(mask)
        cells = out
    return cells


class _Search:
    __slots__ = ("adj", "n", "nbrs", "first_lab", "first_code", "first_path",
                 "best_lab", "best_code", "best_path", "gens")

    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.nbrs = [list(bits(row)) for row in adj]
        self.first_lab = None
        self.first_code = None
        self.first_path = None
        self.best_lab = None
        self.best_code = None
        self.best_path = None
        self.gens: list[tuple[int, ...]] = []

    def leaf(self, cells, path):
        lab = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        nbrs = self.nbrs
        code = []
        for v in lab:
            row = 0
            for u in nbrs[v]:
                row |= 1 << pos[u]
            code.append(row)
        code = tuple(code)
        if self.first_code is None:
            self.first_lab = self.best_lab = lab
            self.first_code = self.best_code = code
            self.first_path = self.best_path = path
            return None
        if code == self.first_code:
            return self._automorphism(lab, pos, self.first_lab, path, self.first_path)
        if code == self.best_code:
            return self._automorphism(lab, pos, self.best_lab, path, self.best_path)
        if code > self.best_code:
            self.best_code = code
            self.best_lab = lab
            self.best_path = path
        return None

    def _automorphism(self, lab, pos, other_lab, path, other_path):
        gamma = tuple(other_lab[pos[v]] for v in range(self.n))
        self.gens.append(gamma)
        depth = 0
        while path[depth] == other_path[depth]:
            depth += 1
        return depth

    def node(self, cells, path):
        n = self.n
        if len(cells) == n:
            return self.leaf(cells, path)
        depth = len(path)
        idx = 0
        while len(cells[idx]) == 1:
            idx += 1
        cell = cells[idx]
        tried: list[int] = []
        orbit = None
        seen_gens = -1
        adj = self.adj
        for v in cell:
            if tried:
                if seen_gens != len(self.gens):
                    seen_gens = len(self.gens)
                    fixing = [g for g in self.gens if all(g[x] == x for x in path)]
                    orbit = orbit_ids(n, fixing) if fixing else None
                if orbit is not None:
                    ov = orbit[v]
                    if any(orbit[u] == ov for u in tried):
                        continue
            rest = [u for u in cell if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            child = refine(adj, child, [1 << v])
            jump = self.node(child, path + [v])
            tried.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


def canonical_labelling(adj: Sequence[int], initial: list[list[int]] | None = None) -> Labelling:
    """Canonical labelling of the graph with neighbour rows ``adj``.

    ``initial`` is an optional ordered colouring (list of cells) that the
    labelling must respect; it defaults to the single cell of all vertices.
    """
    n = len(adj)
    search = _Search(adj)
    if n == 0:
        return Labelling((), (), ())
    cells = [list(c) for c in initial] if initial is not None else [list(range(n))]
    splitters = []
    for c in cells:
        mask = 0
        for v in c:
            mask |= 1 << v
        splitters.append(mask)
    cells = refine(adj, cells, splitters)
    search.node(cells, [])
    return Labelling(tuple(search.best_lab), search.best_code, tuple(search.gens))


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    return Graph._trusted(g.order, canonical_labelling(g.adj).code)


def canonical_certificate(g: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    from .graph6 import encode

    return encode(canonical_form(g)).encode("ascii")


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    return canonical_labelling(g.adj).generators


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labelling(g.adj).code == canonical_labelling(h.adj).code
