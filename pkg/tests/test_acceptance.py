"""Exhaustive runs at full desk scale; selected with -m slow."""

from itertools import combinations

import networkx as nx
import pytest

from src.components.bounds_registry import REGISTRY, quarantined_ids
from src.components.canonical import brute_force_canonical_code, canonical_code
from src.components.catalogs import enumerate_class
from src.components.connectivity import brute_force_connectivity, vertex_connectivity
from src.components.planar_embed import check_lemma, classify
from src.pipeline.sweep_pipeline import SweepPipeline

pytestmark = pytest.mark.slow

SWEEP_BOUNDS = (
    "THM1.1a", "THM1.1b", "THM1.4", "THM1.5", "THM1.6", "THM4.1", "THM4.3a", "THM4.3b",
    "THM4.4a", "THM4.4b", "THM4.6", "THM5.1", "THM5.3", "THM6.1a", "THM6.1b", "PROP3.4", "PROP6.W",
)


def _assert_clean(report):
    assert report.violations() == []
    for agg in report.orders:
        assert agg.class_mismatches == 0
        if agg.recount is not None:
            assert agg.recount == agg.count
        for bound_id in SWEEP_BOUNDS:
            if bound_id in agg.bounds:
                assert agg.bounds[bound_id].violations == []


@pytest.mark.parametrize(
    "graph_class, n_max",
    [("maximal_outerplanar", 12), ("maximal_planar", 10), ("quadrangulation", 9)],
)
def test_catalog_sweeps(graph_class, n_max):
    report = SweepPipeline(workers=2).sweep(graph_class, n_max)
    _assert_clean(report)
    assert report.lemma_failures() == 0


def test_four_connected_triangulations_are_swept():
    report = SweepPipeline(workers=2, run_lemmas=False).sweep("maximal_planar", 10)
    agg = report.order(10)
    assert agg.kappa_filtered(4).count > 0
    assert agg.bounds["THM4.3a"].applied == agg.kappa_filtered(4).count


def test_random_sweep():
    report = SweepPipeline(workers=2).sweep("random_connected", 16, seed=20240917, count=10000)
    _assert_clean(report)
    assert sum(agg.count for agg in report.orders) == 10000


@pytest.mark.parametrize(
    "graph_class, n_max, lemma_ids",
    [
        ("maximal_planar", 9, ("L3.1a", "L3.1b", "L3.1c")),
        ("quadrangulation", 9, ("L3.2",)),
        ("maximal_outerplanar", 12, ("L3.3",)),
    ],
)
def test_lemma_suites(graph_class, n_max, lemma_ids):
    low = 4 if graph_class != "maximal_outerplanar" else 3
    for n in range(low, n_max + 1):
        for g in enumerate_class(graph_class, n):
            kappa = vertex_connectivity(g, witness=False).kappa
            flags = classify(g)
            for lemma_id in lemma_ids:
                if (lemma_id == "L3.1b" and kappa < 4) or (lemma_id == "L3.1c" and kappa < 5):
                    continue
                reports = check_lemma(g, lemma_id, flags=flags, kappa=kappa)
                assert all(r.passed for r in reports), (n, lemma_id, [r for r in reports if not r.passed][:1])


@pytest.mark.parametrize("graph_class", ["maximal_outerplanar", "maximal_planar", "quadrangulation"])
def test_canonical_codes_against_isomorphism(graph_class):
    low = 4 if graph_class != "maximal_outerplanar" else 3
    for n in range(low, 9):
        graphs = list(enumerate_class(graph_class, n))
        codes = [canonical_code(g) for g in graphs]
        assert len(set(codes)) == len(codes)
        for g, h in combinations(graphs, 2):
            assert not nx.is_isomorphic(g.to_networkx(), h.to_networkx())
        if n <= 8:
            brute = [brute_force_canonical_code(g) for g in graphs]
            assert len(set(brute)) == len(brute)


@pytest.mark.parametrize("graph_class", ["maximal_outerplanar", "maximal_planar", "quadrangulation"])
def test_connectivity_against_separators(graph_class):
    low = 4 if graph_class != "maximal_outerplanar" else 3
    for n in range(low, 10):
        for g in enumerate_class(graph_class, n):
            assert vertex_connectivity(g, witness=False).kappa == brute_force_connectivity(g).kappa


def test_quarantine_stays_out_of_verdicts():
    for qid in quarantined_ids():
        spec = REGISTRY[qid]
        assert not spec.verdict_bearing
        assert spec.parent in REGISTRY and spec.parent not in quarantined_ids()
