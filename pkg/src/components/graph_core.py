"""
Graph core component.
Immutable simple-graph representation and exact computation of the
distance invariants used everywhere else:
- status / total distance sigma(v) and its restriction sigma(v|X)
- eccentricities, radius, diameter
- proximity and remoteness as exact rationals
- distance level structure N_0(v), N_1(v), ...
"""

import sys
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src.logger import logging
from src.exception import (
    CustomException,
    DisconnectedGraphError,
    GraphOrderError,
    InvalidVertexError,
    LoopEdgeError,
    VertexRangeError,
)

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Neighbour lists are sorted tuples; ``labels`` optionally names every
    vertex (family label maps such as ``b_0``, ``a_1``).
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    edge_count: int
    labels: Optional[Tuple[str, ...]] = None
    duplicates_collapsed: int = 0

    @property
    def duplicate_edges_collapsed(self) -> bool:
        return self.duplicates_collapsed > 0

    def edges(self) -> List[Tuple[int, int]]:
        """Edge list as (u, v) pairs with u < v, in lexicographic order."""
        return [(u, w) for u in range(self.n) for w in self.adjacency[u] if u < w]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def non_edges(self) -> List[Tuple[int, int]]:
        return [
            (u, w)
            for u in range(self.n)
            for w in range(u + 1, self.n)
            if not self.has_edge(u, w)
        ]

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def vertex_index(self, name) -> int:
        """Resolve a vertex given either as an index or as a family label."""
        if isinstance(name, int):
            return name
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        if isinstance(name, str) and name.isdigit():
            return int(name)
        raise InvalidVertexError(f"unknown vertex {name!r}")

    def with_edge(self, u: int, v: int) -> "Graph":
        return from_edges(self.n, self.edges() + [(u, v)], labels=self.labels)

    def without_edge(self, u: int, v: int) -> "Graph":
        target = (min(u, v), max(u, v))
        return from_edges(self.n, [e for e in self.edges() if e != target], labels=self.labels)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]; labels follow their vertices."""
        labels = None
        if self.labels is not None:
            moved = [""] * self.n
            for v in range(self.n):
                moved[perm[v]] = self.labels[v]
            labels = tuple(moved)
        return from_edges(self.n, [(perm[u], perm[w]) for u, w in self.edges()], labels=labels)

    def without_vertices(self, removed: Iterable[int]) -> Tuple["Graph", List[int]]:
        """
        Induced subgraph on V - removed, re-indexed 0..n'-1.

        Returns:
            tuple: (subgraph, kept) where kept[i] is the original index of new vertex i
        """
        gone = set(removed)
        kept = [v for v in range(self.n) if v not in gone]
        index = {v: i for i, v in enumerate(kept)}
        edges = [(index[u], index[w]) for u, w in self.edges() if u in index and w in index]
        return from_edges(len(kept), edges), kept

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        nodes = sorted(G.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return from_edges(len(nodes), [(index[u], index[v]) for u, v in G.edges()])


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances; UNREACHABLE (-1) entries only when ``connected`` is False."""

    n: int
    dist: np.ndarray
    connected: bool

    def d(self, u: int, v: int) -> int:
        return int(self.dist[u, v])


@dataclass(frozen=True)
class ParamSummary:
    n: int
    status: Tuple[int, ...]
    ecc: Tuple[int, ...]
    proximity: Fraction
    remoteness: Fraction
    radius: int
    diameter: int
    median_vertices: Tuple[int, ...]
    remote_vertices: Tuple[int, ...]

    def average_status(self, v: int) -> Fraction:
        return Fraction(self.status[v], self.n - 1)


@dataclass(frozen=True)
class LevelStructure:
    root: int
    levels: Tuple[Tuple[int, ...], ...]

    @property
    def counts(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    @property
    def eccentricity(self) -> int:
        return len(self.levels) - 1

    def level_of(self) -> Dict[int, int]:
        return {v: i for i, level in enumerate(self.levels) for v in level}


def from_edges(n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None) -> Graph:
    """
    Build a normalised Graph from an edge list.

    Args:
        n: Vertex count (vertices are 0..n-1)
        edges: Iterable of vertex pairs
        labels: Optional vertex names, one per vertex

    Returns:
        Graph: sorted, symmetric adjacency; repeated edges collapsed and counted

    Raises:
        CustomException: wrapping LoopEdgeError / VertexRangeError
    """
    try:
        if n < 0:
            raise GraphOrderError(f"vertex count must be non-negative, got {n}")
        if labels is not None and len(labels) != n:
            raise GraphOrderError(f"expected {n} labels, got {len(labels)}", field="labels")

        neighbours = [set() for _ in range(n)]
        seen = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise LoopEdgeError(f"loop edge ({u}, {v}) is not allowed")
            seen += 1
            neighbours[u].add(v)
            neighbours[v].add(u)

        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbours)
        edge_count = sum(len(nbrs) for nbrs in adjacency) // 2
        duplicates = seen - edge_count
        if duplicates:
            logging.warning(f"Collapsed {duplicates} duplicate edge(s) while building graph of order {n}")

        return Graph(
            n=n,
            adjacency=adjacency,
            edge_count=edge_count,
            labels=tuple(labels) if labels is not None else None,
            duplicates_collapsed=duplicates,
        )

    except Exception as e:
        raise CustomException(e, sys)


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, (int, np.integer)) or not 0 <= v < g.n:
        raise InvalidVertexError(f"vertex {v!r} is not in 0..{g.n - 1}")


def bfs_distances(g: Graph, source: int) -> List[int]:
    """Hop distance from ``source`` to every vertex (UNREACHABLE when none)."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return UNREACHABLE not in bfs_distances(g, 0)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """
    All-pairs hop distances by one BFS per vertex.

    Args:
        g: Input graph

    Returns:
        DistanceMatrix: read-only int64 matrix; ``connected`` flags whether
        any UNREACHABLE entry is present
    """
    try:
        dist = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
        for v in range(g.n):
            dist[v, :] = bfs_distances(g, v)
        dist.setflags(write=False)
        connected = g.n > 0 and not bool((dist == UNREACHABLE).any())
        if not connected:
            logging.debug(f"Distance matrix of order {g.n} has unreachable pairs")
        return DistanceMatrix(n=g.n, dist=dist, connected=connected)

    except Exception as e:
        raise CustomException(e, sys)


def eccentricities(dm: DistanceMatrix) -> Tuple[int, ...]:
    """Per-vertex eccentricity of a connected distance matrix."""
    if not dm.connected:
        raise DisconnectedGraphError("eccentricity is undefined on a disconnected graph")
    return tuple(int(e) for e in dm.dist.max(axis=1))


def param_summary(g: Graph, dm: Optional[DistanceMatrix] = None) -> ParamSummary:
    """
    Exact distance parameters of a connected graph.

    Args:
        g: Connected graph of order n >= 2
        dm: Precomputed distance matrix (computed when omitted)

    Returns:
        ParamSummary: statuses, eccentricities, proximity, remoteness,
        radius, diameter and the vertices attaining proximity / remoteness
    """
    try:
        if g.n < 2:
            raise GraphOrderError(f"distance parameters need n >= 2, got n = {g.n}")
        if dm is None:
            dm = distance_matrix(g)
        if not dm.connected:
            raise DisconnectedGraphError("distance parameters are undefined on a disconnected graph")

        status = tuple(int(s) for s in dm.dist.sum(axis=1))
        ecc = eccentricities(dm)
        low, high = min(status), max(status)

        return ParamSummary(
            n=g.n,
            status=status,
            ecc=ecc,
            proximity=Fraction(low, g.n - 1),
            remoteness=Fraction(high, g.n - 1),
            radius=min(ecc),
            diameter=max(ecc),
            median_vertices=tuple(v for v in range(g.n) if status[v] == low),
            remote_vertices=tuple(v for v in range(g.n) if status[v] == high),
        )

    except Exception as e:
        raise CustomException(e, sys)


def _reachable_distances(g: Graph, v: int) -> List[int]:
    _check_vertex(g, v)
    dist = bfs_distances(g, v)
    if UNREACHABLE in dist:
        raise DisconnectedGraphError("graph is disconnected")
    return dist


def status(g: Graph, v: int) -> int:
    """
    Total distance sigma(v) = sum of d(v, w) over all vertices w.

    Args:
        g: Connected graph
        v: Vertex index

    Returns:
        int: sigma(v)
    """
    try:
        return sum(_reachable_distances(g, v))
    except Exception as e:
        raise CustomException(e, sys)


def status_restricted(g: Graph, v: int, subset: Iterable[int]) -> int:
    """
    Restricted total distance sigma(v|X) = sum of d(v, x) for x in X.

    Args:
        g: Connected graph
        v: Vertex index
        subset: Vertex set X

    Returns:
        int: sigma(v|X) (0 for the empty set)
    """
    try:
        members = list(subset)
        dist = _reachable_distances(g, v)
        for x in members:
            _check_vertex(g, x)
        return sum(dist[x] for x in set(members))
    except Exception as e:
        raise CustomException(e, sys)


def level_sets(g: Graph, v: int) -> LevelStructure:
    """
    Partition of V by distance from v.

    Args:
        g: Connected graph
        v: Root vertex

    Returns:
        LevelStructure: levels N_0(v) = {v}, N_1(v), ..., N_ecc(v)
    """
    try:
        dist = _reachable_distances(g, v)
        levels = [[] for _ in range(max(dist) + 1)]
        for w, d in enumerate(dist):
            levels[d].append(w)
        return LevelStructure(root=v, levels=tuple(tuple(level) for level in levels))
    except Exception as e:
        raise CustomException(e, sys)


if __name__ == "__main__":
    logging.info("=" * 70)
    logging.info("TESTING GRAPH CORE")
    logging.info("=" * 70)

    path5 = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    summary = param_summary(path5)
    logging.info(f"P5: pi={summary.proximity}, rho={summary.remoteness}, rad={summary.radius}, diam={summary.diameter}")

    cycle6 = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    logging.info(f"C6: pi={param_summary(cycle6).proximity}, levels from 0 = {level_sets(cycle6, 0).counts}")
