"""
Exhaustive catalogs of small graphs per class, plus the independent
recount oracles and the seeded random connected graph model.

- maximal outerplanar: ear additions on triangulated convex polygons,
  deduplicated by dihedral normal form (a maximal outerplanar graph has a
  unique Hamiltonian cycle, so polygon symmetries are its isomorphisms)
- maximal planar: diagonal-flip closure from the stacked triangulation,
  deduplicated by canonical code (resumable)
- quadrangulations: filtered generation over bipartite edge subsets of the
  right size, deduplicated by canonical code
"""

import sys
from itertools import combinations
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from src.logger import logging
from src.exception import CheckpointError, CustomException, EnumerationRangeError
from src.components.graph_core import Graph, from_edges, is_connected
from src.components.planar_embed import Embedding, classify, embed_planar
from src.components.canonical import canonical_code
from src.utils.config import get_config
from src.utils.graph6 import decode_graph6

CATALOG_CLASSES = ("maximal_outerplanar", "maximal_planar", "quadrangulation")

PolygonForm = Tuple[Tuple[int, int], ...]


def _check_range(graph_class: str, n: int) -> None:
    low, high = get_config().enumeration_range(graph_class)
    if not low <= n <= high:
        raise EnumerationRangeError(f"{graph_class} enumeration supports {low} <= n <= {high}, got n = {n}")


# Maximal outerplanar graphs

def _dihedral_normal(n: int, diagonals) -> PolygonForm:
    best = None
    for r in range(n):
        for sign in (1, -1):
            image = tuple(sorted(
                tuple(sorted(((sign * a + r) % n, (sign * b + r) % n))) for a, b in diagonals
            ))
            if best is None or image < best:
                best = image
    return best


def _add_ear(n: int, form: PolygonForm, i: int) -> PolygonForm:
    # a new vertex is inserted on polygon edge (i, i+1); that edge becomes a diagonal
    def shift(v):
        return v if v <= i else v + 1

    diagonals = [(shift(a), shift(b)) for a, b in form]
    a, b = shift(i), shift((i + 1) % n)
    diagonals.append((min(a, b), max(a, b)))
    return _dihedral_normal(n + 1, diagonals)


def _polygon_graph(n: int, form: PolygonForm) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)] + list(form)
    return from_edges(n, edges)


def polygon_triangulation_forms(n: int) -> List[PolygonForm]:
    """Dihedral classes of triangulated convex n-gons, by repeated ear addition."""
    forms = {()}
    for size in range(3, n):
        forms = {_add_ear(size, form, i) for form in forms for i in range(size)}
    return sorted(forms)


def enumerate_maximal_outerplanar(n: int) -> Iterator[Graph]:
    """
    All maximal outerplanar graphs of order n up to isomorphism.

    Args:
        n: Order within the configured range (3..14 by default)

    Returns:
        Iterator[Graph]: one representative per class, polygon order 0..n-1
    """
    try:
        _check_range("maximal_outerplanar", n)
        forms = polygon_triangulation_forms(n)
        logging.info(f"Maximal outerplanar catalog n = {n}: {len(forms)} graph(s)")
        return iter([_polygon_graph(n, form) for form in forms])
    except Exception as e:
        raise CustomException(e, sys)


def _labelled_triangulations(polygon: Tuple[int, ...]) -> Iterator[List[Tuple[int, int]]]:
    # the base edge (first, last) lies in exactly one triangle (first, apex, last)
    if len(polygon) < 3:
        yield []
        return
    first, last = polygon[0], polygon[-1]
    for k in range(1, len(polygon) - 1):
        apex = polygon[k]
        chords = []
        if k > 1:
            chords.append((first, apex))
        if k < len(polygon) - 2:
            chords.append((apex, last))
        for left in _labelled_triangulations(polygon[:k + 1]):
            for right in _labelled_triangulations(polygon[k:]):
                yield chords + left + right


def count_polygon_triangulation_classes(n: int) -> int:
    """
    Number of triangulated convex n-gons up to rotation and reflection,
    by brute force over every labelled triangulation.
    """
    try:
        if n < 3:
            raise EnumerationRangeError(f"a polygon needs n >= 3, got n = {n}")
        classes = {
            _dihedral_normal(n, [tuple(sorted(d)) for d in diagonals])
            for diagonals in _labelled_triangulations(tuple(range(n)))
        }
        return len(classes)
    except Exception as e:
        raise CustomException(e, sys)


# Maximal planar graphs

def stacked_triangulation(n: int) -> Graph:
    """K4 with every further vertex stacked into the face (0, 1, last)."""
    edges = [(u, w) for u in range(4) for w in range(u + 1, 4)]
    for v in range(4, n):
        edges += [(0, v), (1, v), (v - 1, v)]
    return from_edges(n, edges)


def _flips(g: Graph, emb: Embedding) -> Iterator[Graph]:
    third = {}
    for walk in emb.faces:
        if len(walk) != 3:
            continue
        for i in range(3):
            u, w, x = walk[i], walk[(i + 1) % 3], walk[(i + 2) % 3]
            third.setdefault((min(u, w), max(u, w)), []).append(x)
    for (u, w), apexes in sorted(third.items()):
        if len(apexes) != 2:
            continue
        x, y = apexes
        if x != y and not g.has_edge(x, y):
            yield g.without_edge(u, w).with_edge(x, y)


def enumerate_triangulations(
    n: int,
    state: Optional[Dict] = None,
    on_checkpoint: Optional[Callable[[Dict], None]] = None,
) -> Iterator[Graph]:
    """
    All maximal planar graphs of order n up to isomorphism by flip closure.

    Args:
        n: Order within the configured range (4..10 by default)
        state: Saved {n, seen, frontier} to resume from
        on_checkpoint: Called with the current state every
            ``enumeration.checkpoint_every`` expansions

    Returns:
        Iterator[Graph]: catalog in canonical-code order
    """
    try:
        _check_range("maximal_planar", n)
        if state is not None:
            if state.get("n") != n:
                raise CheckpointError(f"checkpoint enumerates n = {state.get('n')}, requested n = {n}")
            seen = set(state["seen"])
            frontier = list(state["frontier"])
            logging.info(f"Resuming flip closure n = {n}: {len(seen)} seen, {len(frontier)} pending")
        else:
            start = canonical_code(stacked_triangulation(n))
            seen, frontier = {start}, [start]

        every = get_config().checkpoint_every()
        expanded = 0
        while frontier:
            code = frontier.pop(0)
            g = decode_graph6(code)
            emb = embed_planar(g)
            for h in _flips(g, emb):
                h_code = canonical_code(h)
                if h_code not in seen:
                    seen.add(h_code)
                    frontier.append(h_code)
            expanded += 1
            if on_checkpoint is not None and expanded % every == 0:
                on_checkpoint({"n": n, "seen": sorted(seen), "frontier": list(frontier)})

        logging.info(f"Maximal planar catalog n = {n}: {len(seen)} graph(s)")
        return iter([decode_graph6(code) for code in sorted(seen)])

    except Exception as e:
        raise CustomException(e, sys)


def enumerate_triangulations_by_filter(n: int) -> List[Graph]:
    """
    Independent triangulation catalog: every graph with 3n - 6 edges and
    minimum degree >= 3 that is planar, deduplicated by canonical code.
    """
    try:
        if n < 4:
            raise EnumerationRangeError(f"filter oracle needs n >= 4, got n = {n}")
        pairs = list(combinations(range(n), 2))
        codes = set()
        for chosen in combinations(pairs, 3 * n - 6):
            degree = [0] * n
            for u, w in chosen:
                degree[u] += 1
                degree[w] += 1
            if min(degree) < 3:
                continue
            G = nx.Graph(chosen)
            if nx.check_planarity(G)[0]:
                codes.add(canonical_code(from_edges(n, chosen)))
        return [decode_graph6(code) for code in sorted(codes)]
    except Exception as e:
        raise CustomException(e, sys)


# Quadrangulations

def enumerate_quadrangulations(n: int) -> Iterator[Graph]:
    """
    All quadrangulations of order n up to isomorphism.

    Every bipartition (a, b) with 2 <= a <= b is scanned for edge sets of
    size 2n - 4 inside K_{a,b} with minimum degree 2; survivors are kept
    when connected with every face of length 4.

    Args:
        n: Order within the configured range (4..9 by default)

    Returns:
        Iterator[Graph]: catalog in canonical-code order
    """
    try:
        _check_range("quadrangulation", n)
        m = 2 * n - 4
        codes = set()
        for a in range(2, n // 2 + 1):
            cross = [(u, w) for u in range(a) for w in range(a, n)]
            if len(cross) < m:
                continue
            for chosen in combinations(cross, m):
                degree = [0] * n
                for u, w in chosen:
                    degree[u] += 1
                    degree[w] += 1
                if min(degree) < 2:
                    continue
                g = from_edges(n, chosen)
                if is_connected(g) and classify(g).quadrangulation:
                    codes.add(canonical_code(g))
        logging.info(f"Quadrangulation catalog n = {n}: {len(codes)} graph(s)")
        return iter([decode_graph6(code) for code in sorted(codes)])
    except Exception as e:
        raise CustomException(e, sys)


def enumerate_class(graph_class: str, n: int, **kwargs) -> Iterator[Graph]:
    """Dispatch to the catalog of ``graph_class``."""
    if graph_class == "maximal_outerplanar":
        return enumerate_maximal_outerplanar(n)
    if graph_class == "maximal_planar":
        return enumerate_triangulations(n, **kwargs)
    if graph_class == "quadrangulation":
        return enumerate_quadrangulations(n)
    raise CustomException(EnumerationRangeError(f"no catalog for class {graph_class!r}", field="class"), sys)


# Random connected graphs

def random_connected_graphs(count: int, seed: int, min_n: int = 2, max_n: int = 16) -> Iterator[Graph]:
    """
    Seeded uniform-random-edge model with connectivity rejection.

    Each sample draws n uniformly from [min_n, max_n], m uniformly from
    [n - 1, n(n-1)/2] and m distinct vertex pairs; disconnected samples
    are redrawn.

    Args:
        count: Number of graphs
        seed: numpy Generator seed
        min_n: Smallest order (>= 2)
        max_n: Largest order

    Returns:
        Iterator[Graph]
    """
    if min_n < 2 or max_n < min_n:
        raise CustomException(EnumerationRangeError(f"random orders need 2 <= min_n <= max_n, got {min_n}..{max_n}"), sys)
    rng = np.random.default_rng(seed)
    produced = 0
    while produced < count:
        n = int(rng.integers(min_n, max_n + 1))
        pairs = list(combinations(range(n), 2))
        m = int(rng.integers(n - 1, comb(n, 2) + 1))
        picks = rng.choice(len(pairs), size=m, replace=False)
        g = from_edges(n, [pairs[i] for i in sorted(picks)])
        if is_connected(g):
            produced += 1
            yield g


if __name__ == "__main__":
    logging.info("=" * 70)
    logging.info("TESTING CATALOGS")
    logging.info("=" * 70)

    for n in range(3, 9):
        logging.info(f"MOP n={n}: {len(list(enumerate_maximal_outerplanar(n)))}")
    for n in range(4, 8):
        logging.info(f"triangulations n={n}: {len(list(enumerate_triangulations(n)))}")
    for n in range(4, 8):
        logging.info(f"quadrangulations n={n}: {len(list(enumerate_quadrangulations(n)))}")
