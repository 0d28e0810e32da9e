import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from src.components.canonical import (
    brute_force_canonical_code,
    canonical_code,
    canonical_form,
    canonical_labeling,
)
from src.components.families import FamilySpec, generate
from src.components.graph_core import from_edges
from helpers import PROPERTY_SETTINGS, connected_graphs, cube, cycle, octahedron, path, star


class TestCanonicalCode:
    def test_relabelled_c4(self):
        other = from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
        assert canonical_code(cycle(4)) == canonical_code(other)

    def test_p4_and_claw_differ(self):
        assert canonical_code(path(4)) != canonical_code(star(3))

    def test_labelling_is_a_permutation(self):
        perm = canonical_labeling(generate(FamilySpec("T", 11)))
        assert sorted(perm) == list(range(11))

    def test_form_drops_labels(self):
        form = canonical_form(generate(FamilySpec("MOP", 8)))
        assert form.labels is None and form.edge_count == 13

    def test_vertex_transitive_graphs(self):
        for g in (cube(), octahedron(), cycle(7)):
            assert canonical_code(g) == canonical_code(g.relabeled(list(reversed(range(g.n)))))

    def test_empty_graph(self):
        assert canonical_labeling(from_edges(0, [])) == []

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=10), data=st.data())
    def test_invariant_under_relabelling(self, g, data):
        perm = data.draw(st.permutations(list(range(g.n))))
        assert canonical_code(g) == canonical_code(g.relabeled(perm))

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=8), h=connected_graphs(max_n=8))
    def test_separates_exactly_the_isomorphism_classes(self, g, h):
        same = g.n == h.n and nx.is_isomorphic(g.to_networkx(), h.to_networkx())
        assert (canonical_code(g) == canonical_code(h)) == same

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=6), h=connected_graphs(max_n=6))
    def test_agrees_with_brute_force_classes(self, g, h):
        fast = canonical_code(g) == canonical_code(h)
        brute = brute_force_canonical_code(g) == brute_force_canonical_code(h)
        assert fast == brute

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=9))
    def test_canonical_form_is_isomorphic(self, g):
        assert nx.is_isomorphic(canonical_form(g).to_networkx(), g.to_networkx())
