from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.exception import (
    DisconnectedGraphError,
    GraphOrderError,
    InvalidVertexError,
    LoopEdgeError,
    VertexRangeError,
)
from src.components.catalogs import enumerate_triangulations
from src.components.connectivity import is_k_connected
from src.components.families import FamilySpec, generate
from src.components.graph_core import (
    UNREACHABLE,
    Graph,
    distance_matrix,
    from_edges,
    is_connected,
    level_sets,
    param_summary,
    status,
    status_restricted,
)
from helpers import PROPERTY_SETTINGS, complete, connected_graphs, cube, cycle, octahedron, path, star


class TestFromEdges:
    def test_path_p3(self):
        g = from_edges(3, [(0, 1), (1, 2)])
        assert g.edge_count == 2
        assert g.adjacency == ((1,), (0, 2), (1,))

    def test_complete_k4(self):
        assert complete(4).edge_count == 6
        assert complete(4).is_complete()

    def test_duplicates_are_collapsed_and_flagged(self):
        g = from_edges(4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edge_count == 4
        assert g.duplicates_collapsed == 1
        assert g.duplicate_edges_collapsed
        assert not cycle(4).duplicate_edges_collapsed

    def test_reversed_pair_counts_as_duplicate(self):
        g = from_edges(2, [(0, 1), (1, 0)])
        assert g.edge_count == 1
        assert g.duplicates_collapsed == 1

    def test_loop_rejected(self, rejected):
        err = rejected(LoopEdgeError, from_edges, 3, [(0, 1), (2, 2)])
        assert "(2, 2)" in str(err.original)
        assert err.field == "edges"

    def test_vertex_out_of_range_rejected(self, rejected):
        rejected(VertexRangeError, from_edges, 3, [(0, 3)])
        rejected(VertexRangeError, from_edges, 3, [(-1, 0)])

    def test_label_count_must_match(self, rejected):
        err = rejected(GraphOrderError, from_edges, 2, [(0, 1)], labels=["a"])
        assert err.field == "labels"


class TestGraphMethods:
    def test_without_vertices_reindexes(self):
        sub, kept = cycle(5).without_vertices([0])
        assert kept == [1, 2, 3, 4]
        assert sub.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_with_and_without_edge(self):
        g = path(4).with_edge(0, 3)
        assert g.edge_count == 4 and g.has_edge(3, 0)
        assert g.without_edge(3, 0).edges() == path(4).edges()

    def test_non_edges(self):
        assert path(4).non_edges() == [(0, 2), (0, 3), (1, 3)]

    def test_labels_and_vertex_index(self):
        g = generate(FamilySpec("T", 11))
        assert g.label(0) == "b_0"
        assert g.vertex_index("b_0") == 0
        assert path(3).label(2) == "2"

    def test_unknown_label_rejected(self):
        with pytest.raises(InvalidVertexError):
            path(3).vertex_index("z_9")

    def test_networkx_round_trip(self):
        g = cycle(6)
        assert Graph.from_networkx(g.to_networkx()).edges() == g.edges()


class TestDistanceMatrix:
    def test_path_p3(self):
        assert distance_matrix(path(3)).d(0, 2) == 2

    def test_complete_k4(self):
        dm = distance_matrix(complete(4))
        assert dm.connected
        assert all(dm.d(u, w) == (0 if u == w else 1) for u in range(4) for w in range(4))

    def test_cycle_antipodal(self):
        assert distance_matrix(cycle(6)).d(0, 3) == 3

    def test_disconnected_flagged(self):
        dm = distance_matrix(from_edges(4, [(0, 1), (2, 3)]))
        assert not dm.connected
        assert dm.d(0, 2) == UNREACHABLE

    def test_matrix_is_read_only(self):
        dm = distance_matrix(path(3))
        with pytest.raises(ValueError):
            dm.dist[0, 1] = 5


class TestParamSummary:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_complete_graphs(self, n):
        s = param_summary(complete(n))
        assert s.proximity == s.remoteness == 1
        assert s.radius == s.diameter == 1

    def test_path_p5(self):
        s = param_summary(path(5))
        assert s.proximity == Fraction(3, 2)
        assert s.remoteness == Fraction(5, 2)
        assert s.median_vertices == (2,)
        assert s.remote_vertices == (0, 4)
        assert (s.radius, s.diameter) == (2, 4)

    def test_cycle_c6(self):
        s = param_summary(cycle(6))
        assert s.proximity == s.remoteness == Fraction(9, 5)
        assert s.average_status(0) == Fraction(9, 5)

    def test_disconnected_rejected(self, rejected):
        rejected(DisconnectedGraphError, param_summary, from_edges(3, [(0, 1)]))

    def test_single_vertex_rejected(self, rejected):
        rejected(GraphOrderError, param_summary, from_edges(1, []))

    @PROPERTY_SETTINGS
    @given(g=connected_graphs())
    def test_orderings_of_invariants(self, g):
        s = param_summary(g)
        assert 1 <= s.proximity <= s.remoteness
        assert s.radius <= s.diameter <= 2 * s.radius
        assert s.proximity <= s.radius
        assert s.remoteness <= s.diameter

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(), data=st.data())
    def test_relabelling_invariance(self, g, data):
        perm = data.draw(st.permutations(list(range(g.n))))
        a, b = param_summary(g), param_summary(g.relabeled(perm))
        assert (a.proximity, a.remoteness, a.radius, a.diameter) == (b.proximity, b.remoteness, b.radius, b.diameter)
        assert sorted(a.status) == sorted(b.status)

    @PROPERTY_SETTINGS
    @given(g=connected_graphs())
    def test_status_matches_matrix_rows(self, g):
        dm = distance_matrix(g)
        assert [status(g, v) for v in range(g.n)] == [int(x) for x in np.asarray(dm.dist).sum(axis=1)]

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=16))
    def test_agrees_with_networkx_shortest_paths(self, g):
        lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
        totals = [sum(lengths[v].values()) for v in range(g.n)]
        ecc = [max(lengths[v].values()) for v in range(g.n)]
        s = param_summary(g)
        assert list(s.status) == totals
        assert list(s.ecc) == ecc
        assert s.proximity == Fraction(min(totals), g.n - 1)
        assert s.remoteness == Fraction(max(totals), g.n - 1)
        assert (s.radius, s.diameter) == (min(ecc), max(ecc))


class TestStatus:
    def test_path_endpoint(self):
        assert status(path(4), 0) == 6

    def test_star_centre(self):
        assert status(star(4), 0) == 4

    def test_t11_b0(self):
        g = generate(FamilySpec("T", 11))
        assert status(g, g.vertex_index("b_0")) == 22

    def test_invalid_vertex(self, rejected):
        rejected(InvalidVertexError, status, path(3), 3)

    def test_restricted_empty(self):
        assert status_restricted(cycle(5), 2, []) == 0

    def test_restricted_single(self):
        assert status_restricted(path(4), 0, [3]) == 3

    def test_restricted_cycle(self):
        assert status_restricted(cycle(6), 0, [1, 2, 3]) == 6

    def test_restricted_invalid_member(self, rejected):
        rejected(InvalidVertexError, status_restricted, path(4), 0, [7])


class TestLevelSets:
    def test_k4(self):
        assert level_sets(complete(4), 0).levels == ((0,), (1, 2, 3))

    def test_p5_middle(self):
        assert level_sets(path(5), 2).counts == (1, 2, 2)

    def test_q8_from_b0(self):
        g = generate(FamilySpec("Q", 8))
        ls = level_sets(g, g.vertex_index("b_0"))
        assert ls.counts == (1, 2, 2, 2, 1)
        assert ls.eccentricity == 4

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=16), data=st.data())
    def test_status_is_weighted_level_sum(self, g, data):
        v = data.draw(st.integers(0, g.n - 1))
        counts = level_sets(g, v).counts
        assert status(g, v) == sum(i * size for i, size in enumerate(counts))
        assert sum(counts) == g.n and all(size > 0 for size in counts)

    @pytest.mark.parametrize(
        "g",
        [
            octahedron(),
            cube(),
            generate(FamilySpec("T", 11)),
            generate(FamilySpec("Gnk", 17, kappa=3)),
            generate(FamilySpec("DiamExtremal", 14, kappa=3, d=4)),
            *enumerate_triangulations(8),
        ],
    )
    def test_inner_levels_of_3_connected_graphs(self, g):
        assert is_k_connected(g, 3)
        for v in range(g.n):
            inner = level_sets(g, v).counts[1:-1]
            assert all(size >= 3 for size in inner), (v, inner)

    def test_disconnected_rejected(self, rejected):
        rejected(DisconnectedGraphError, level_sets, from_edges(3, [(0, 1)]), 0)

    def test_is_connected(self):
        assert is_connected(path(3))
        assert not is_connected(from_edges(0, []))
