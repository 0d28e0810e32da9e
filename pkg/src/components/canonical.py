"""
Canonical labelling by individualization-refinement.

The search tree starts from the degree partition, refines every node to an
equitable partition, and individualizes the vertices of the first
non-singleton cell. Every leaf is a vertex ordering; the canonical code is
the graph6 string of the leaf whose upper-triangle bit string is least.
Automorphisms found as pairs of leaves with equal codes prune children
that lie in one orbit of the automorphisms fixing the current prefix.
"""

import sys
from itertools import permutations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.logger import logging
from src.exception import CustomException
from src.components.graph_core import Graph, from_edges
from src.utils.graph6 import encode_graph6

Cells = List[List[int]]


def _initial_partition(g: Graph) -> Cells:
    by_degree = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    return [by_degree[deg] for deg in sorted(by_degree)]


def _refine(nbrs: Sequence[FrozenSet[int]], cells: Cells) -> Cells:
    """Split cells by neighbour counts into each cell until the partition is equitable."""
    cells = [list(c) for c in cells]
    while True:
        split = False
        for s in range(len(cells)):
            splitter = set(cells[s])
            refined = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(len(nbrs[v] & splitter), []).append(v)
                if len(groups) == 1:
                    refined.append(cell)
                    continue
                refined.extend(groups[c] for c in sorted(groups))
                split = True
            cells = refined
            if split:
                break
        if not split:
            return cells


def _leaf_code(g: Graph, order: Sequence[int]) -> int:
    # graph6 bit order: column j, rows 0..j-1
    code = 0
    for j in range(1, len(order)):
        vj = order[j]
        for i in range(j):
            code = (code << 1) | g.has_edge(order[i], vj)
    return code


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.nbrs = [frozenset(a) for a in g.adjacency]
        self.first: Optional[Tuple[int, Tuple[int, ...]]] = None
        self.best: Optional[Tuple[int, Tuple[int, ...]]] = None
        self.generators: List[Tuple[int, ...]] = []
        self.leaves = 0

    def _automorphism(self, source: Sequence[int], target: Sequence[int]) -> None:
        gamma = [0] * self.g.n
        for a, b in zip(source, target):
            gamma[a] = b
        gamma = tuple(gamma)
        if any(gamma[v] != v for v in range(self.g.n)) and gamma not in self.generators:
            self.generators.append(gamma)

    def _orbit_root(self, v: int, cell: Sequence[int], prefix: Sequence[int]) -> int:
        fixing = [gm for gm in self.generators if all(gm[p] == p for p in prefix)]
        parent = {u: u for u in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gm in fixing:
            for u in cell:
                w = gm[u]
                if w in parent:
                    ru, rw = find(u), find(w)
                    if ru != rw:
                        parent[max(ru, rw)] = min(ru, rw)
        return find(v)

    def _leaf(self, cells: Cells) -> None:
        self.leaves += 1
        order = tuple(c[0] for c in cells)
        code = _leaf_code(self.g, order)
        if self.first is None:
            self.first = self.best = (code, order)
            return
        if code == self.first[0]:
            self._automorphism(self.first[1], order)
        elif code == self.best[0]:
            self._automorphism(self.best[1], order)
        elif code < self.best[0]:
            self.best = (code, order)

    def run(self, cells: Cells, prefix: List[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf(cells)
            return
        cell = sorted(cells[target])
        explored: List[int] = []
        for v in cell:
            if explored:
                root = self._orbit_root(v, cell, prefix)
                if any(self._orbit_root(u, cell, prefix) == root for u in explored):
                    continue
            explored.append(v)
            child = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1:]
            self.run(_refine(self.nbrs, child), prefix + [v])


def canonical_labeling(g: Graph) -> List[int]:
    """
    Canonical position of every vertex.

    Args:
        g: Graph

    Returns:
        list: perm with perm[v] the canonical index of vertex v
    """
    try:
        if g.n == 0:
            return []
        search = _Search(g)
        search.run(_refine(search.nbrs, _initial_partition(g)), [])
        order = search.best[1]
        perm = [0] * g.n
        for position, v in enumerate(order):
            perm[v] = position
        logging.debug(f"Canonical search on n = {g.n}: {search.leaves} leaves, {len(search.generators)} generators")
        return perm
    except Exception as e:
        raise CustomException(e, sys)


def canonical_form(g: Graph) -> Graph:
    """Canonically relabelled copy of g (labels dropped)."""
    perm = canonical_labeling(g)
    return from_edges(g.n, [(perm[u], perm[w]) for u, w in g.edges()])


def canonical_code(g: Graph) -> str:
    """
    Isomorphism-invariant graph6 code.

    Args:
        g: Graph

    Returns:
        str: graph6 string of the canonical form
    """
    try:
        return encode_graph6(canonical_form(g))
    except Exception as e:
        raise CustomException(e, sys)


def brute_force_canonical_code(g: Graph) -> str:
    """
    Least graph6 code over every vertex ordering (oracle for small n).

    The code differs from ``canonical_code`` in general; the two must induce
    the same isomorphism classes.
    """
    try:
        if g.n > 8:
            logging.warning(f"Brute-force canonical code on n = {g.n} enumerates {g.n}! orderings")
        best = min(permutations(range(g.n)), key=lambda order: _leaf_code(g, order)) if g.n else ()
        perm = [0] * g.n
        for position, v in enumerate(best):
            perm[v] = position
        return encode_graph6(from_edges(g.n, [(perm[u], perm[w]) for u, w in g.edges()]))
    except Exception as e:
        raise CustomException(e, sys)


if __name__ == "__main__":
    logging.info("=" * 70)
    logging.info("TESTING CANONICAL CODES")
    logging.info("=" * 70)

    c4a = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    c4b = from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    logging.info(f"C4 codes: {canonical_code(c4a)} {canonical_code(c4b)}")
    p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    logging.info(f"P4 {canonical_code(p4)} vs K1,3 {canonical_code(star)}")
