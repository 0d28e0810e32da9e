from itertools import combinations

import pytest
from hypothesis import given

from src.exception import ClassPreconditionError, DisconnectedGraphError, MalformedRotationError
from src.components.catalogs import enumerate_class
from src.components.families import FamilySpec, generate
from src.components.graph_core import from_edges
from src.components.planar_embed import (
    Embedding,
    NonPlanarWitness,
    active_sets,
    check_lemma,
    classify,
    embed_planar,
    faces,
    format_rotation,
    is_maximal_by_edge_addition,
    lemmas_for,
    outerplane_embedding,
    recheck_counterexample,
)
from helpers import PROPERTY_SETTINGS, complete, connected_graphs, cube, cycle, k33, octahedron, path


class TestEmbedPlanar:
    def test_k4_has_four_triangles(self):
        emb = embed_planar(complete(4))
        assert isinstance(emb, Embedding)
        assert sorted(emb.face_lengths()) == [3, 3, 3, 3]

    def test_k5_witness(self):
        witness = embed_planar(complete(5))
        assert isinstance(witness, NonPlanarWitness)
        assert witness.kind == "K5"
        assert witness.branch_vertices == (0, 1, 2, 3, 4)
        assert len(witness.paths) == 10

    def test_k33_witness(self):
        witness = embed_planar(k33())
        assert isinstance(witness, NonPlanarWitness)
        assert witness.kind == "K33"
        assert len(witness.paths) == 9

    def test_q8_has_six_quadrilaterals(self):
        emb = embed_planar(generate(FamilySpec("Q", 8)))
        assert emb.n == 8 and emb.edge_count == 12
        assert emb.face_lengths() == [4] * 6

    def test_disconnected_rejected(self, rejected):
        rejected(DisconnectedGraphError, embed_planar, from_edges(4, [(0, 1), (2, 3)]))

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=9))
    def test_euler_formula_holds(self, g):
        emb = embed_planar(g)
        if isinstance(emb, Embedding):
            assert g.n - g.edge_count + len(emb.faces) == 2
            assert sum(emb.face_lengths()) == 2 * g.edge_count
            assert faces(emb) == list(emb.faces)


class TestFaces:
    def test_c4_rotation(self):
        emb = Embedding(rotation=((1, 3), (0, 2), (1, 3), (0, 2)), faces=())
        assert sorted(len(f) for f in faces(emb)) == [4, 4]

    def test_k4_rotation(self):
        emb = embed_planar(complete(4))
        assert sorted(len(f) for f in faces(emb)) == [3, 3, 3, 3]

    def test_octahedron(self):
        assert [len(f) for f in faces(embed_planar(octahedron()))] == [3] * 8

    def test_single_vertex(self):
        assert faces(Embedding(rotation=((),), faces=())) == [(0,)]

    def test_asymmetric_rotation_rejected(self, rejected):
        emb = Embedding(rotation=((1,), ()), faces=())
        rejected(MalformedRotationError, faces, emb)

    def test_repeated_neighbour_rejected(self, rejected):
        emb = Embedding(rotation=((1, 1), (0,)), faces=())
        rejected(MalformedRotationError, faces, emb)

    def test_non_planar_rotation_rejected(self, rejected):
        # K4 with one vertex's rotation reversed traces too few faces
        emb = embed_planar(complete(4))
        rotation = list(emb.rotation)
        rotation[0] = (rotation[0][1], rotation[0][0], rotation[0][2])
        err = rejected(MalformedRotationError, faces, Embedding(rotation=tuple(rotation), faces=()))
        assert err.field == "rotation"

    def test_format_rotation(self):
        emb = Embedding(rotation=((1,), (0,)), faces=())
        assert format_rotation(emb) == "0: 1\n1: 0\n"


class TestOuterplaneEmbedding:
    def test_mop8(self):
        g = generate(FamilySpec("MOP", 8))
        emb = outerplane_embedding(g)
        assert emb is not None
        assert len(emb.faces[emb.outer_face]) == 8
        inner = [f for j, f in enumerate(emb.faces) if j != emb.outer_face]
        assert [len(f) for f in inner] == [3] * 6

    def test_k4_is_not_outerplanar(self):
        assert outerplane_embedding(complete(4)) is None


class TestClassify:
    def test_k4(self):
        flags = classify(complete(4))
        assert flags.maximal_planar and flags.planar
        assert not flags.outerplanar

    def test_c4_is_smallest_quadrangulation(self):
        flags = classify(cycle(4))
        assert flags.quadrangulation and flags.bipartite
        assert not flags.maximal_planar

    def test_mop8(self):
        g = generate(FamilySpec("MOP", 8))
        flags = classify(g)
        assert flags.maximal_outerplanar and flags.outerplanar
        assert g.edge_count == 13

    def test_t11(self):
        assert classify(generate(FamilySpec("T", 11))).maximal_planar

    def test_cube_is_quadrangulation(self):
        assert classify(cube()).quadrangulation

    def test_path_is_no_quadrangulation(self):
        assert not classify(path(4)).quadrangulation

    def test_star_is_bipartite_maximal_but_no_quadrangulation(self):
        star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert is_maximal_by_edge_addition(star, "planar_bipartite")
        assert not classify(star).quadrangulation

    def test_k5(self):
        flags = classify(complete(5))
        assert not flags.planar and not flags.maximal_planar

    def test_disconnected_rejected(self, rejected):
        rejected(DisconnectedGraphError, classify, from_edges(3, [(0, 1)]))

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(min_n=4, max_n=8))
    def test_flags_agree_with_edge_addition(self, g):
        flags = classify(g)
        assert flags.maximal_planar == is_maximal_by_edge_addition(g, "planar")
        assert flags.maximal_outerplanar == is_maximal_by_edge_addition(g, "outerplanar")
        if flags.quadrangulation:
            assert is_maximal_by_edge_addition(g, "planar_bipartite")

    @pytest.mark.parametrize(
        "graph_class, n",
        [
            pytest.param(graph_class, n, marks=[pytest.mark.slow] if n >= 8 else [])
            for graph_class, low in [("maximal_planar", 4), ("maximal_outerplanar", 3), ("quadrangulation", 4)]
            for n in range(low, 10)
        ],
    )
    def test_catalog_flags_agree_with_edge_addition(self, graph_class, n):
        for g in enumerate_class(graph_class, n):
            flags = classify(g)
            assert getattr(flags, graph_class)
            assert flags.maximal_planar == is_maximal_by_edge_addition(g, "planar")
            assert flags.maximal_outerplanar == is_maximal_by_edge_addition(g, "outerplanar")
            if flags.quadrangulation:
                assert is_maximal_by_edge_addition(g, "planar_bipartite")

    @PROPERTY_SETTINGS
    @given(g=connected_graphs(max_n=8))
    def test_flag_implications(self, g):
        flags = classify(g)
        if flags.maximal_planar or flags.quadrangulation:
            assert flags.planar
        if flags.maximal_outerplanar:
            assert flags.outerplanar
        if flags.outerplanar:
            assert flags.planar


class TestActiveSets:
    def test_cycle(self):
        s = active_sets(cycle(6), 0)
        assert s.active_sets == {1: (1, 5), 2: (2, 4)}

    def test_k4_is_degenerate(self):
        s = active_sets(complete(4), 0)
        assert s.levels == []

    def test_t11_first_level(self):
        g = generate(FamilySpec("T", 11))
        s = active_sets(g, g.vertex_index("b_0"))
        assert len(s.active_sets[1]) == 3

    def test_non_planar_has_no_face_graphs(self):
        s = active_sets(from_edges(6, list(combinations(range(5), 2)) + [(4, 5)]), 5)
        assert s.face_sharing_graphs is None
        assert s.active_sets[1] == (4,)


class TestLemmas:
    def test_l32_on_c4(self):
        reports = check_lemma(cycle(4), "L3.2")
        assert reports and all(r.passed for r in reports)

    def test_l33_on_mop8(self):
        g = generate(FamilySpec("MOP", 8))
        b0 = g.vertex_index("b_0")
        reports = [r for r in check_lemma(g, "L3.3") if r.root == b0]
        assert reports and all(r.passed for r in reports)

    def test_l31b_on_octahedron(self):
        reports = check_lemma(octahedron(), "L3.1b")
        assert len(reports) == 6
        assert all(r.passed for r in reports)

    @pytest.mark.parametrize("lemma_id", ["L3.1a", "L3.1b", "L3.1c"])
    def test_t11_is_3_connected_only(self, lemma_id, rejected):
        g = generate(FamilySpec("T", 11))
        if lemma_id == "L3.1a":
            assert all(r.passed for r in check_lemma(g, lemma_id))
        else:
            err = rejected(ClassPreconditionError, check_lemma, g, lemma_id)
            assert "connected" in str(err.original)

    def test_precondition_names_flag(self, rejected):
        err = rejected(ClassPreconditionError, check_lemma, path(4), "L3.2")
        assert "quadrangulation" in str(err.original)
        assert err.field == "class"

    def test_unknown_lemma(self, rejected):
        err = rejected(ClassPreconditionError, check_lemma, cycle(4), "L9.9")
        assert err.field == "lemma"

    def test_lemmas_for(self):
        assert lemmas_for(classify(octahedron()), 4) == ["L3.1a", "L3.1b"]
        assert lemmas_for(classify(cycle(4)), 2) == ["L3.2", "L3.3"]
        assert lemmas_for(classify(path(3)), 1) == []

    def test_recheck_needs_a_failure(self):
        report = check_lemma(cycle(4), "L3.2")[0]
        assert not recheck_counterexample(cycle(4), report)
