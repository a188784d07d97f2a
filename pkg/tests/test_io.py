import pytest
from hypothesis import given

from chromforest.errors import GraphFormatError
from chromforest.graph import Graph
from chromforest.io import (
    apply_edge_order,
    format_edge_list,
    guess_format,
    load_graph,
    parse_dimacs,
    parse_edge_list,
)

from conftest import graphs


class TestEdgeList:
    def test_basic(self):
        g = parse_edge_list("# triangle\n1 2\n2 3  # trailing\n\n3 1\n")
        assert g.vertices == (1, 2, 3) and g.m == 3

    def test_isolated_vertex_line(self):
        g = parse_edge_list("a b\nc\n")
        assert g.vertices == ("a", "b", "c") and g.m == 1

    def test_mixed_labels(self):
        g = parse_edge_list("1 x\n")
        assert set(g.vertices) == {1, "x"}

    def test_bad_line(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("1 2\n1 2 3\n")

    def test_self_loop(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("1 1\n")

    def test_duplicate(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("1 2\n2 1\n")

    @given(graphs(max_n=7))
    def test_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g)) == Graph.from_edges(g.labelled_edges(), vertices=g.vertices)


class TestDimacs:
    def test_basic(self):
        g = parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n")
        assert g.vertices == (1, 2, 3) and g.labelled_edges() == [(1, 2), (2, 3)]

    def test_isolated_vertices_from_header(self):
        g = parse_dimacs("p edge 4 1\ne 1 2\n")
        assert g.n == 4

    @pytest.mark.parametrize(
        "text",
        [
            "e 1 2\n",
            "p edge 2 1\np edge 2 1\ne 1 2\n",
            "p edge 2\ne 1 2\n",
            "p edge 2 1\ne 1 3\n",
            "p edge 2 2\ne 1 2\n",
            "p edge 2 1\nx 1 2\n",
            "p edge 2 1\ne 1 1\n",
            "p edge two 1\ne 1 2\n",
            "",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(GraphFormatError):
            parse_dimacs(text)


class TestFiles:
    def test_guess(self):
        assert guess_format("a.col") == "dimacs"
        assert guess_format("a.txt") == "edgelist"

    def test_load(self, tmp_path):
        p = tmp_path / "g.col"
        p.write_text("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")
        assert load_graph(p).m == 3
        with pytest.raises(GraphFormatError):
            load_graph(tmp_path / "missing.txt")

    def test_edge_order(self, k3):
        g = apply_edge_order(k3, "2 3\n# comment\n1 3\n1 2\n")
        assert g.labelled_edges() == [(2, 3), (1, 3), (1, 2)]

    def test_edge_order_incomplete(self, k3):
        with pytest.raises(GraphFormatError):
            apply_edge_order(k3, "1 2\n")
        with pytest.raises(GraphFormatError):
            apply_edge_order(k3, "1 2\n1 3\n2 3\n1 4\n")
