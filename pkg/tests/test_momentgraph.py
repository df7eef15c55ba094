import json

import pytest

from bottsamelson.compute.momentgraph import (
    build_interval_graph,
    build_lower_set_graph,
    d_of_x,
    export_graph,
    gkm_check,
    label_image,
    require_gkm,
)
from bottsamelson.compute.rootsys import make_root
from bottsamelson.exceptions import IncompleteInterval, NonGKMInput, ZeroLabel
from bottsamelson.model.Field import Field
from bottsamelson.model.MultiPoly import MultiPoly


class TestIntervalGraph:
    def test_longest_element_of_a2(self, a2, q):
        g = build_interval_graph(a2, a2.longest_element(), q)
        assert g.graph.number_of_nodes() == 6
        assert g.graph.number_of_edges() == 9
        assert g.top == a2.longest_element()

    def test_edges_go_up_in_length(self, a2, q):
        g = build_interval_graph(a2, a2.longest_element(), q)
        for start, end in g.graph.edges:
            assert start.length < end.length
            assert g.graph.edges[start, end]["root"].is_positive()

    def test_label_is_weight_image(self, a2, q):
        s1 = a2.simple_reflection(1)
        g = build_interval_graph(a2, s1, q)
        assert g.label(a2.identity, s1) == MultiPoly.linear_form(q, (2, -1, 0))

    def test_vertex_set_must_be_closed_downwards(self, a2, q):
        top = a2.ev_word((1, 2))
        with pytest.raises(IncompleteInterval):
            build_lower_set_graph(a2, [a2.identity, top], q)

    def test_affine_interval(self, affine_a1, q):
        g = build_interval_graph(affine_a1, affine_a1.ev_word((0, 1, 0, 1)), q)
        assert g.graph.number_of_nodes() == 8
        assert g.graph.number_of_edges() == 16

    def test_label_vanishing_over_field(self, affine_a1):
        with pytest.raises(ZeroLabel):
            label_image(Field(3), make_root(affine_a1.datum, (3,), 3, check=False))


class TestGkm:
    @pytest.mark.parametrize("p, passed", [(0, True), (5, True), (7, True), (3, False)])
    def test_a2_longest_element(self, a2, p, passed):
        g = build_interval_graph(a2, a2.longest_element(), Field(p))
        assert gkm_check(g).passed is passed

    def test_even_short_intervals_fail_in_characteristic_3(self, a2):
        g = build_interval_graph(a2, a2.ev_word((1, 2)), Field(3))
        report = gkm_check(g)
        assert not report.passed
        assert report.to_dict()["char"] == 3
        with pytest.raises(NonGKMInput):
            require_gkm(g)

    def test_affine_a1(self, affine_a1):
        w = affine_a1.ev_word((0, 1, 0, 1))
        report = gkm_check(build_interval_graph(affine_a1, w, Field(3)))
        assert not report.passed
        offending = {(v.first.weights, v.second.weights) for v in report.violations if v.vertex.is_identity}
        assert ((2, 1), (-2, 2)) in offending or ((-2, 2), (2, 1)) in offending
        assert gkm_check(build_interval_graph(affine_a1, w, Field(5))).passed


class TestDOfX:
    def test_simple_reflection(self, a2, q):
        s1 = a2.simple_reflection(1)
        g = build_interval_graph(a2, a2.longest_element(), q)
        assert d_of_x(g, s1) == -MultiPoly.linear_form(q, (2, -1, 0))
        assert d_of_x(g, a2.identity) == MultiPoly.one(q, 3)

    def test_degree_is_twice_the_length(self, a2, q):
        g = build_interval_graph(a2, a2.longest_element(), q)
        w0 = a2.longest_element()
        assert set(d_of_x(g, w0).monomial_degrees()) == {6}

    def test_missing_vertex(self, a2, q):
        g = build_interval_graph(a2, a2.simple_reflection(1), q)
        with pytest.raises(IncompleteInterval):
            d_of_x(g, a2.simple_reflection(2))


class TestExport:
    def test_formats(self, a2, q):
        g = build_interval_graph(a2, a2.longest_element(), q)
        assert "digraph" in export_graph(g, "dot")
        assert "<graphml" in export_graph(g, "graphml")
        assert "graph [" in export_graph(g, "gml")
        assert len(json.loads(export_graph(g, "json"))["nodes"]) == 6

    def test_model_json(self, a2, q):
        data = build_interval_graph(a2, a2.ev_word((1, 2)), q).to_dict()
        assert data["top"] == "1,2"
        assert [v["word"] for v in data["vertices"]] == ["", "1", "2", "1,2"]
        assert {"start": "", "end": "1", "root": "[1,0]+0d", "label": [2, -1, 0]} in data["edges"]

    def test_unknown_format(self, a2, q):
        g = build_interval_graph(a2, a2.simple_reflection(1), q)
        with pytest.raises(ValueError):
            export_graph(g, "svg")
