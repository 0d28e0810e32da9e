"""
Planar embedding component.
Rotation systems from networkx's left-right planarity test, face tracing,
class predicates (planar, outerplanar, bipartite, maximal planar,
quadrangulation, maximal outerplanar) and executable checks of the
active-vertex lemmas on embedded graphs.
"""

import sys
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import networkx as nx

from src.logger import logging
from src.exception import (
    ClassPreconditionError,
    CustomException,
    DisconnectedGraphError,
    MalformedRotationError,
)
from src.components.graph_core import Graph, is_connected, level_sets
from src.components.connectivity import vertex_connectivity

LEMMA_IDS = ("L3.1a", "L3.1b", "L3.1c", "L3.2", "L3.3")

Rotation = Tuple[Tuple[int, ...], ...]
Face = Tuple[int, ...]


@dataclass(frozen=True)
class Embedding:
    """
    Combinatorial embedding: clockwise neighbour order per vertex plus the
    face walks it induces. ``outer_face`` indexes ``faces`` for outerplane
    embeddings and is None otherwise.
    """

    rotation: Rotation
    faces: Tuple[Face, ...]
    outer_face: Optional[int] = None

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def face_lengths(self) -> List[int]:
        return [len(f) for f in self.faces]


@dataclass(frozen=True)
class NonPlanarWitness:
    kind: str
    branch_vertices: Tuple[int, ...]
    paths: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ClassFlags:
    planar: bool
    outerplanar: bool
    bipartite: bool
    maximal_planar: bool
    quadrangulation: bool
    maximal_outerplanar: bool

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


@dataclass(frozen=True)
class ActiveStructure:
    """
    Active vertices A_i(v) for 1 <= i <= ecc(v) - 1, keyed by level.
    ``face_sharing_graphs`` maps each level to the adjacency of H_i (None
    when the graph has no planar embedding).
    """

    root: int
    active_sets: Dict[int, Tuple[int, ...]]
    face_sharing_graphs: Optional[Dict[int, Dict[int, FrozenSet[int]]]]

    @property
    def levels(self) -> List[int]:
        return sorted(self.active_sets)


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    root: int
    level: int
    verdict: str
    counterexample: Optional[Tuple[int, ...]] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _validate_rotation(rotation: Sequence[Sequence[int]]) -> None:
    n = len(rotation)
    for v, order in enumerate(rotation):
        if len(set(order)) != len(order):
            raise MalformedRotationError(f"rotation of vertex {v} repeats a neighbour")
        for w in order:
            if not isinstance(w, int) or not 0 <= w < n or w == v:
                raise MalformedRotationError(f"rotation of vertex {v} names invalid neighbour {w!r}")
            if v not in rotation[w]:
                raise MalformedRotationError(f"edge ({v}, {w}) is missing from the rotation of {w}")


def _trace_faces(rotation: Sequence[Sequence[int]]) -> List[Face]:
    # Half-edge (u, v) continues as (v, successor of u in v's clockwise order)
    position = [{w: i for i, w in enumerate(order)} for order in rotation]
    visited = set()
    walks: List[Face] = []
    for u in range(len(rotation)):
        for v in rotation[u]:
            if (u, v) in visited:
                continue
            walk = []
            edge = (u, v)
            while edge not in visited:
                visited.add(edge)
                a, b = edge
                walk.append(a)
                nbrs = rotation[b]
                edge = (b, nbrs[(position[b][a] + 1) % len(nbrs)])
            walks.append(tuple(walk))
    if not walks and len(rotation) == 1:
        walks.append((0,))
    return walks


def faces(emb: Embedding) -> List[Face]:
    """
    Trace the face walks of a rotation system.

    Args:
        emb: Embedding whose rotation is traced (stored faces are ignored)

    Returns:
        list: Face walks; every directed edge is used exactly once

    Raises:
        CustomException: wrapping MalformedRotationError when the rotation is
        not a simple symmetric neighbour system or is not planar
    """
    try:
        _validate_rotation(emb.rotation)
        walks = _trace_faces(emb.rotation)
        n, m = len(emb.rotation), sum(len(r) for r in emb.rotation) // 2
        if n and n - m + len(walks) != 2:
            raise MalformedRotationError(
                f"rotation traces {len(walks)} faces; Euler's formula needs {2 - n + m}"
            )
        return walks
    except Exception as e:
        raise CustomException(e, sys)


def _kuratowski_witness(sub: nx.Graph) -> NonPlanarWitness:
    branch = sorted(v for v in sub.nodes() if sub.degree(v) > 2)
    kind = "K5" if len(branch) == 5 else "K33"
    branch_set = set(branch)
    paths = set()
    for b in branch:
        for w in sub.neighbors(b):
            path, prev, cur = [b], b, w
            while cur not in branch_set:
                path.append(cur)
                prev, cur = cur, next(x for x in sub.neighbors(cur) if x != prev)
            path.append(cur)
            if path[0] > path[-1]:
                path.reverse()
            paths.add(tuple(path))
    return NonPlanarWitness(kind=kind, branch_vertices=tuple(branch), paths=tuple(sorted(paths)))


def embed_planar(g: Graph) -> Union[Embedding, NonPlanarWitness]:
    """
    Planar embedding of a connected graph, or a Kuratowski witness.

    Args:
        g: Connected graph

    Returns:
        Embedding | NonPlanarWitness: rotation system with traced faces, or
        the branch vertices and paths of a K5 / K3,3 subdivision
    """
    try:
        if not is_connected(g):
            raise DisconnectedGraphError("embedding needs a connected graph")

        planar, cert = nx.check_planarity(g.to_networkx(), counterexample=True)
        if not planar:
            witness = _kuratowski_witness(cert)
            logging.debug(f"Non-planar: {witness.kind} subdivision on {witness.branch_vertices}")
            return witness

        rotation = tuple(tuple(cert.neighbors_cw_order(v)) for v in range(g.n))
        return Embedding(rotation=rotation, faces=tuple(_trace_faces(rotation)))

    except Exception as e:
        raise CustomException(e, sys)


def outerplane_embedding(g: Graph) -> Optional[Embedding]:
    """
    Outerplane embedding by the apex reduction.

    A new vertex is joined to every vertex; g is outerplanar iff the result
    is planar. Deleting the apex from that rotation leaves an embedding of
    g whose faces are the apex-free faces plus one outer face.

    Args:
        g: Connected graph

    Returns:
        Embedding | None: embedding with ``outer_face`` set, None when g is
        not outerplanar
    """
    try:
        if not is_connected(g):
            raise DisconnectedGraphError("embedding needs a connected graph")

        apex = g.n
        G = g.to_networkx()
        G.add_edges_from((apex, v) for v in range(g.n))
        planar, emb = nx.check_planarity(G)
        if not planar:
            return None

        full = [tuple(emb.neighbors_cw_order(v)) for v in range(g.n + 1)]
        inner_half_edges = set()
        for walk in _trace_faces(full):
            if apex not in walk:
                inner_half_edges.update(zip(walk, walk[1:] + walk[:1]))

        rotation = tuple(tuple(w for w in full[v] if w != apex) for v in range(g.n))
        walks = _trace_faces(rotation)
        outer = 0
        for i, walk in enumerate(walks):
            if any(e not in inner_half_edges for e in zip(walk, walk[1:] + walk[:1])):
                outer = i
                break
        return Embedding(rotation=rotation, faces=tuple(walks), outer_face=outer)

    except Exception as e:
        raise CustomException(e, sys)


def _is_planar(G: nx.Graph) -> bool:
    return nx.check_planarity(G)[0]


def _is_outerplanar(G: nx.Graph) -> bool:
    H = G.copy()
    apex = ("apex",)
    H.add_edges_from((apex, v) for v in G.nodes())
    return _is_planar(H)


_MAXIMALITY_PREDICATES: Dict[str, Callable[[nx.Graph], bool]] = {
    "planar": _is_planar,
    "planar_bipartite": lambda G: nx.is_bipartite(G) and _is_planar(G),
    "outerplanar": _is_outerplanar,
}


def is_maximal_by_edge_addition(g: Graph, predicate: str) -> bool:
    """
    Literal maximality test: g has the property and adding any non-edge
    destroys it.

    Args:
        g: Graph
        predicate: 'planar', 'planar_bipartite' or 'outerplanar'

    Returns:
        bool
    """
    try:
        holds = _MAXIMALITY_PREDICATES[predicate]
        G = g.to_networkx()
        if not holds(G):
            return False
        for u, w in g.non_edges():
            G.add_edge(u, w)
            still = holds(G)
            G.remove_edge(u, w)
            if still:
                return False
        return True
    except Exception as e:
        raise CustomException(e, sys)


def classify(g: Graph) -> ClassFlags:
    """
    Class membership flags of a connected graph.

    Maximality flags use the edge-count characterisations (m = 3n - 6,
    m = 2n - 3, m = 2n - 4 with all faces of length 4);
    ``is_maximal_by_edge_addition`` is the literal cross-check.

    Args:
        g: Connected graph

    Returns:
        ClassFlags
    """
    try:
        if not is_connected(g):
            raise DisconnectedGraphError("classification needs a connected graph")

        n, m = g.n, g.edge_count
        G = g.to_networkx()
        planar, emb = nx.check_planarity(G)
        outerplanar = planar and _is_outerplanar(G)
        bipartite = nx.is_bipartite(G)

        maximal_planar = planar and (m == 3 * n - 6 if n >= 3 else g.is_complete())
        maximal_outerplanar = outerplanar and (m == 2 * n - 3 if n >= 2 else True)

        quadrangulation = False
        if planar and bipartite and n >= 4 and m == 2 * n - 4:
            rotation = [tuple(emb.neighbors_cw_order(v)) for v in range(n)]
            quadrangulation = all(len(walk) == 4 for walk in _trace_faces(rotation))

        return ClassFlags(
            planar=planar,
            outerplanar=outerplanar,
            bipartite=bipartite,
            maximal_planar=maximal_planar,
            quadrangulation=quadrangulation,
            maximal_outerplanar=maximal_outerplanar,
        )

    except Exception as e:
        raise CustomException(e, sys)


def _face_sharing(active: Sequence[int], walks: Sequence[Face]) -> Dict[int, FrozenSet[int]]:
    members = set(active)
    adjacency = {u: set() for u in active}
    for walk in walks:
        on_face = members.intersection(walk)
        for u in on_face:
            adjacency[u].update(on_face - {u})
    return {u: frozenset(nbrs) for u, nbrs in adjacency.items()}


def _lemma_embedding(g: Graph) -> Optional[Embedding]:
    # The outerplane embedding is the one the outerplanar lemma speaks about;
    # 3-connected planar graphs and quadrangulations have a unique embedding.
    outer = outerplane_embedding(g)
    if outer is not None:
        return outer
    emb = embed_planar(g)
    return emb if isinstance(emb, Embedding) else None


def _active_structure(g: Graph, v: int, emb: Optional[Embedding], skip_outer: bool = False) -> ActiveStructure:
    levels = level_sets(g, v).levels
    active = {}
    for i in range(1, len(levels) - 1):
        nxt = set(levels[i + 1])
        active[i] = tuple(u for u in levels[i] if nxt.intersection(g.adjacency[u]))

    sharing = None
    if emb is not None:
        walks = emb.faces
        if skip_outer and emb.outer_face is not None:
            walks = [w for j, w in enumerate(emb.faces) if j != emb.outer_face]
        sharing = {i: _face_sharing(a, walks) for i, a in active.items()}
    return ActiveStructure(root=v, active_sets=active, face_sharing_graphs=sharing)


def active_sets(g: Graph, v: int) -> ActiveStructure:
    """
    Active vertices and face-sharing graphs around a root.

    Args:
        g: Connected graph
        v: Root vertex

    Returns:
        ActiveStructure: empty when ecc(v) <= 1; ``face_sharing_graphs`` is
        None for non-planar graphs
    """
    try:
        return _active_structure(g, v, _lemma_embedding(g))
    except Exception as e:
        raise CustomException(e, sys)


def _two_neighbours(u: int, h: Dict[int, FrozenSet[int]]) -> Optional[Tuple[int, ...]]:
    return None if len(h[u]) >= 2 else (u,)


def _triple_escapes(h: Dict[int, FrozenSet[int]]) -> Optional[Tuple[int, ...]]:
    for triple in combinations(sorted(h), 3):
        chosen = set(triple)
        if not any(h[x] - chosen for x in triple):
            return triple
    return None


def _separated_pair(u: int, h: Dict[int, FrozenSet[int]]) -> Optional[Tuple[int, ...]]:
    for w, x in combinations(sorted(h[u]), 2):
        if h[w] & h[x] <= {u}:
            return None
    return (u,)


def _shares_face(u: int, h: Dict[int, FrozenSet[int]]) -> Optional[Tuple[int, ...]]:
    return None if h[u] else (u,)


_PER_VERTEX = {
    "L3.1a": _two_neighbours,
    "L3.1c": _separated_pair,
    "L3.2": _shares_face,
    "L3.3": _shares_face,
}

_REQUIRED_KAPPA = {"L3.1a": 3, "L3.1b": 4, "L3.1c": 5, "L3.3": 2}


def lemmas_for(flags: ClassFlags, kappa: int) -> List[str]:
    """Lemma ids whose class hypotheses hold for a graph with these flags."""
    ids = []
    if flags.planar:
        ids.extend(lid for lid in ("L3.1a", "L3.1b", "L3.1c") if kappa >= _REQUIRED_KAPPA[lid])
    if flags.quadrangulation:
        ids.append("L3.2")
    if flags.outerplanar and kappa >= 2:
        ids.append("L3.3")
    return ids


def _require_class(lemma_id: str, flags: ClassFlags, kappa: int) -> None:
    if lemma_id not in LEMMA_IDS:
        raise ClassPreconditionError(f"unknown lemma id {lemma_id!r}", field="lemma")
    if lemma_id == "L3.2":
        if not flags.quadrangulation:
            raise ClassPreconditionError("L3.2 needs a quadrangulation; flag 'quadrangulation' is false")
        return
    needed = _REQUIRED_KAPPA[lemma_id]
    flag, holds = ("outerplanar", flags.outerplanar) if lemma_id == "L3.3" else ("planar", flags.planar)
    if not holds:
        raise ClassPreconditionError(f"{lemma_id} needs an {flag} graph; flag '{flag}' is false")
    if kappa < needed:
        raise ClassPreconditionError(
            f"{lemma_id} needs a {needed}-connected graph; flag '{needed}-connected' is false (kappa = {kappa})"
        )


def _check_level(lemma_id: str, h: Dict[int, FrozenSet[int]]) -> Optional[Tuple[int, ...]]:
    if lemma_id == "L3.1b":
        return _triple_escapes(h)
    rule = _PER_VERTEX[lemma_id]
    for u in sorted(h):
        bad = rule(u, h)
        if bad is not None:
            return bad
    return None


def check_lemma(
    g: Graph,
    lemma_id: str,
    flags: Optional[ClassFlags] = None,
    kappa: Optional[int] = None,
    embedding: Optional[Embedding] = None,
) -> List[LemmaReport]:
    """
    Check an active-vertex lemma at every root and level.

    Args:
        g: Graph in the lemma's class
        lemma_id: One of L3.1a, L3.1b, L3.1c, L3.2, L3.3
        flags: Precomputed class flags (computed when omitted)
        kappa: Precomputed vertex connectivity (computed when omitted)
        embedding: Precomputed lemma embedding (computed when omitted)

    Returns:
        list: One LemmaReport per (root, level), ordered by root then level

    Raises:
        CustomException: wrapping ClassPreconditionError naming the failed flag
    """
    try:
        flags = flags if flags is not None else classify(g)
        kappa = kappa if kappa is not None else vertex_connectivity(g, witness=False).kappa
        _require_class(lemma_id, flags, kappa)

        emb = embedding if embedding is not None else _lemma_embedding(g)
        reports = []
        for v in range(g.n):
            structure = _active_structure(g, v, emb, skip_outer=lemma_id == "L3.3")
            for level in structure.levels:
                bad = _check_level(lemma_id, structure.face_sharing_graphs[level])
                reports.append(LemmaReport(
                    lemma_id=lemma_id,
                    root=v,
                    level=level,
                    verdict="pass" if bad is None else "fail",
                    counterexample=bad,
                ))

        failures = [r for r in reports if not r.passed]
        if failures:
            logging.warning(f"{lemma_id} failed at {len(failures)} (root, level) pair(s), first {failures[0]}")
        return reports

    except Exception as e:
        raise CustomException(e, sys)


def recheck_counterexample(g: Graph, report: LemmaReport) -> bool:
    """
    Independently confirm a failing report: True iff the stored vertices
    violate the lemma at the stored root and level.
    """
    try:
        if report.passed or report.counterexample is None:
            return False
        structure = _active_structure(g, report.root, _lemma_embedding(g), skip_outer=report.lemma_id == "L3.3")
        h = structure.face_sharing_graphs[report.level]
        if report.lemma_id == "L3.1b":
            chosen = set(report.counterexample)
            return len(chosen) == 3 and chosen <= set(h) and not any(h[x] - chosen for x in chosen)
        u = report.counterexample[0]
        return u in h and _PER_VERTEX[report.lemma_id](u, h) is not None
    except Exception as e:
        raise CustomException(e, sys)


def format_rotation(emb: Embedding) -> str:
    """Adjacency-rotation text, one 'v: n1 n2 ...' line per vertex."""
    return "".join(f"{v}: {' '.join(str(w) for w in order)}\n" for v, order in enumerate(emb.rotation))


if __name__ == "__main__":
    from src.components.graph_core import from_edges

    logging.info("=" * 70)
    logging.info("TESTING PLANAR EMBEDDING")
    logging.info("=" * 70)

    k4 = from_edges(4, list(combinations(range(4), 2)))
    emb = embed_planar(k4)
    logging.info(f"K4 faces: {emb.faces}")
    print(format_rotation(emb))
    logging.info(f"K4 flags: {classify(k4)}")

    k5 = from_edges(5, list(combinations(range(5), 2)))
    logging.info(f"K5: {embed_planar(k5)}")

    c6 = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    logging.info(f"C6 active sets from 0: {active_sets(c6, 0).active_sets}")
