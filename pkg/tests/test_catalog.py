import itertools
import math

import pytest

from matchtop import catalog
from matchtop import complexes as cx
from matchtop import graphs as gr
from matchtop import manifold as mf
from matchtop.errors import InvalidParameterError


def test_recognize_basics():
    assert str(catalog.recognize_basic(gr.path(3))) == "P3"
    assert str(catalog.recognize_basic(gr.path(2))) == "P2"
    assert str(catalog.recognize_basic(gr.cycle(5))) == "C5"
    assert str(catalog.recognize_basic(gr.complete_bipartite(3, 2))) == "K32"
    assert str(catalog.recognize_basic(gr.banner())) == "Gamma"
    assert str(catalog.recognize_basic(gr.spider(5))) == "Spider(5)"
    assert catalog.recognize_basic(gr.cycle(4)) is None
    assert catalog.recognize_basic(gr.complete(4)) is None


def test_spider2_reported_as_spider_with_note():
    kind = catalog.recognize_basic(gr.path(5))
    assert str(kind) == "Spider(2)"
    assert kind.note == "isomorphic to P5"


def test_recognize_requires_connected_no_isolated():
    with pytest.raises(InvalidParameterError):
        catalog.recognize_basic(gr.disjoint_union([gr.path(2), gr.path(2)]))
    with pytest.raises(InvalidParameterError):
        catalog.recognize_basic(gr.new_graph(3, [(0, 1)]))


def test_exceptional_table_checksums():
    table = catalog.exceptional_table()
    assert len(table) == 10
    for entry in table:
        assert entry.graph.vertex_count == entry.vertices
        assert len(entry.graph.edges) == entry.edges
    by_name = {e.name: e for e in table}
    assert (by_name["annulus_8e"].vertices, by_name["annulus_8e"].edges) == (7, 8)
    assert (by_name["torus_disk_11e"].vertices, by_name["torus_disk_11e"].edges) == (7, 11)


def test_exceptional_classes_verify():
    for entry in catalog.exceptional_table():
        M = cx.matching_complex(entry.graph)
        assert str(mf.classify(M)) == str(entry.expected_class), entry.name


def test_predictions_basic_arithmetic():
    p = catalog.predict(gr.disjoint_union(
        [gr.path(3), gr.cycle(5), gr.complete_bipartite(3, 2)]))
    assert str(p.predicted_class) == "Sphere(4)" and p.predicted_dimension == 4
    p = catalog.predict(gr.disjoint_union([gr.path(2), gr.banner(), gr.spider(3)]))
    assert str(p.predicted_class) == "Ball(5)" and p.predicted_dimension == 5
    p = catalog.predict(gr.complete_bipartite(4, 3))
    assert p.kind == "exceptional" and p.exceptional_name == "K43"
    assert str(p.predicted_class) == "Torus"
    assert catalog.predict(gr.cycle(6)).kind == "none"


def test_prediction_matches_computation_small_unions():
    basics = [gr.path(2), gr.path(3), gr.cycle(5), gr.complete_bipartite(3, 2),
              gr.banner(), gr.spider(2), gr.spider(3)]
    for combo in itertools.combinations_with_replacement(range(len(basics)), 2):
        g = gr.disjoint_union([basics[i] for i in combo])
        pred = catalog.predict(g)
        M = cx.matching_complex(g)
        verdict = mf.check_manifold(M, 2)
        got = mf.classify(M, verdict)
        assert str(got) == str(pred.predicted_class), (combo, str(got))
        assert verdict.dimension == pred.predicted_dimension


def test_crosspolytope_f_vectors():
    for ell in range(1, 6):
        M = cx.matching_complex(gr.disjoint_union([gr.path(3)] * ell))
        fv = cx.f_vector(M).positive
        expected = tuple(2 ** (k + 1) * math.comb(ell, k + 1) for k in range(ell))
        assert fv == expected


def test_spider_facet_structure():
    for k in range(2, 7):
        M = cx.matching_complex(gr.spider(k))
        facets = M.facets()
        assert len(facets) == k + 1
        assert all(len(f) == k for f in facets)
        # one facet (the outer-tip matching) meets every other in k-1 vertices
        core = [f for f in facets if all(len(set(f) & set(g)) == k - 1
                                         for g in facets if g != f)]
        assert len(core) == 1


def test_disconnected_ball_table_verifies():
    for name, g, _ in catalog.disconnected_ball_table():
        M = cx.matching_complex(g)
        v = mf.check_manifold(M, 2)
        assert v.status == mf.STATUS_WITH_BOUNDARY and v.dimension == 2, name
        assert str(mf.classify(M, v)) == "Ball(2)", name
        pred = catalog.predict(g)
        assert str(pred.predicted_class) == "Ball(2)", name


def test_named_graph_resolution():
    assert catalog.named_graph("K43") == gr.complete_bipartite(4, 3)
    assert catalog.named_graph("C7-matching") == gr.cycle(7)
    assert catalog.named_graph("gamma") == gr.banner()
    assert catalog.named_graph("Sp3") == gr.spider(3)
    assert gr.are_isomorphic(catalog.named_graph("2P3"),
                             gr.disjoint_union([gr.path(3), gr.path(3)]))
    with pytest.raises(InvalidParameterError):
        catalog.named_graph("no-such-graph")
    assert "k43" in catalog.catalog_names()


def test_expected_hits_budget_filtering():
    hits = catalog.expected_search_hits("1-sphere", 6, 10, False)
    assert sorted(name for name, _, _ in hits) == ["2P3", "C5", "K32"]
    hits = catalog.expected_search_hits("1-sphere", 5, 10, False)
    assert sorted(name for name, _, _ in hits) == ["2P3", "C5"]
    hits = catalog.expected_search_hits("2-manifold-with-boundary", 11, 10, True)
    assert len(hits) == 9
    hits = catalog.expected_search_hits("2-manifold-with-boundary", 11, 10, False)
    assert len(hits) == 18
    assert catalog.expected_search_hits("disconnected-complex", 8, 10, False) is None
