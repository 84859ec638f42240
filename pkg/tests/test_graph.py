import json

import networkx as nx
import pytest

from rigidlab.exceptions import GraphParseError, InvalidArgumentError
from rigidlab.graph import AttachmentSpec, ChainSpec, Graph, from_json, from_text, loads, to_json, to_text


class TestGraph:
    def test_edges_are_canonicalised_and_sorted(self):
        g = Graph(4, ((3, 1), (0, 2), (1, 0)))
        assert g.edges == ((0, 1), (0, 2), (1, 3))

    def test_edge_count(self):
        assert Graph(3, ((0, 1), (1, 2))).edge_count == 2

    def test_self_loop_rejected(self):
        with pytest.raises(InvalidArgumentError):
            Graph(3, ((1, 1),))

    def test_duplicate_edge_rejected(self):
        with pytest.raises(InvalidArgumentError):
            Graph(3, ((0, 1), (1, 0)))

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidArgumentError):
            Graph(2, ((0, 2),))

    def test_negative_vertex_count_rejected(self):
        with pytest.raises(InvalidArgumentError):
            Graph(-1)

    def test_empty_graph(self):
        g = Graph(0)
        assert g.edge_count == 0
        assert g.min_degree() == 0

    def test_adjacency_and_degree(self, quad_with_diagonal):
        assert quad_with_diagonal.neighbors(0) == frozenset({1, 2, 3})
        assert quad_with_diagonal.degree(1) == 2
        assert quad_with_diagonal.min_degree() == 2

    def test_has_edge_ignores_orientation(self, quad_with_diagonal):
        assert quad_with_diagonal.has_edge(2, 0)
        assert not quad_with_diagonal.has_edge(1, 3)

    def test_is_complete(self, triangle, square):
        assert triangle.is_complete()
        assert not square.is_complete()

    def test_edge_index_follows_canonical_order(self, quad_with_diagonal):
        assert [quad_with_diagonal.edge_index[e] for e in quad_with_diagonal.edges] == list(range(5))

    def test_induced_subgraph_relabels(self, quad_with_diagonal):
        sub = quad_with_diagonal.induced_subgraph([0, 2, 3])
        assert sub.vertex_count == 3
        assert sub.edges == ((0, 1), (0, 2), (1, 2))

    def test_networkx_round_trip(self, quad_with_diagonal):
        nx_graph = quad_with_diagonal.to_networkx()
        assert isinstance(nx_graph, nx.Graph)
        assert Graph.from_networkx(nx_graph) == quad_with_diagonal

    def test_isolated_vertices_survive_networkx(self):
        g = Graph(5, ((0, 1),))
        assert g.to_networkx().number_of_nodes() == 5

    def test_summary(self, triangle):
        assert triangle.summary() == "Graph(v=3, e=3)"


class TestChainSpec:
    def test_counts(self):
        spec = ChainSpec((2, 3, 5, 4))
        assert spec.k == 4
        assert spec.vertex_count == 14
        assert spec.edge_count == 2 * 3 + 3 * 5 + 5 * 4

    def test_interior(self):
        assert ChainSpec((1, 6, 6, 2)).interior == (6, 6)

    def test_canonical_form_picks_smaller_reading(self):
        assert ChainSpec((2, 6, 6, 1)).canonical_form == (1, 6, 6, 2)
        assert ChainSpec((1, 6, 6, 2)).canonical() == ChainSpec((1, 6, 6, 2))

    def test_block_offsets(self):
        assert ChainSpec((2, 3, 4)).block_offsets() == (0, 2, 5)

    def test_block_degrees(self):
        assert ChainSpec((2, 3, 4)).block_degrees() == (3, 6, 3)
        assert ChainSpec((2, 3, 4)).min_degree() == 3

    def test_too_few_blocks(self):
        with pytest.raises(InvalidArgumentError):
            ChainSpec((5,))

    def test_non_positive_block(self):
        with pytest.raises(InvalidArgumentError):
            ChainSpec((1, 0, 2))

    def test_str_and_parse(self):
        assert str(ChainSpec((1, 6, 7, 1))) == "1,6,7,1"
        assert ChainSpec.parse("1, 6,7 ,1") == ChainSpec((1, 6, 7, 1))

    def test_parse_rejects_garbage(self):
        with pytest.raises(InvalidArgumentError):
            ChainSpec.parse("1,x,2")


class TestAttachmentSpec:
    def test_chain_from_anchors(self, k6_attachment_spec):
        assert k6_attachment_spec.chain == ChainSpec((2, 3, 5, 4))

    def test_anchors_are_sorted(self, triangle):
        spec = AttachmentSpec(host=triangle, left_anchor=(2,), right_anchor=(1, 0))
        assert spec.right_anchor == (0, 1)

    def test_overlapping_anchors_rejected(self, triangle):
        with pytest.raises(InvalidArgumentError, match="overlap"):
            AttachmentSpec(host=triangle, left_anchor=(0, 1), right_anchor=(1, 2))

    def test_repeated_anchor_vertex_rejected(self, triangle):
        with pytest.raises(InvalidArgumentError):
            AttachmentSpec(host=triangle, left_anchor=(0, 0), right_anchor=(1,))

    def test_empty_anchor_rejected(self, triangle):
        with pytest.raises(InvalidArgumentError):
            AttachmentSpec(host=triangle, left_anchor=(), right_anchor=(1,))

    def test_anchor_outside_host_rejected(self, triangle):
        with pytest.raises(InvalidArgumentError):
            AttachmentSpec(host=triangle, left_anchor=(0,), right_anchor=(3,))

    def test_non_positive_interior_rejected(self, triangle):
        with pytest.raises(InvalidArgumentError):
            AttachmentSpec(host=triangle, left_anchor=(0,), right_anchor=(1,), interior_sizes=(2, 0))


class TestTextFormat:
    def test_to_text(self, triangle):
        assert to_text(triangle) == "v 3\ne 0 1\ne 0 2\ne 1 2\n"

    def test_round_trip(self, quad_with_diagonal):
        assert from_text(to_text(quad_with_diagonal)) == quad_with_diagonal

    def test_comments_and_blank_lines(self):
        g = from_text("# a path\nv 3\n\ne 0 1  # first\ne 2 1\n")
        assert g == Graph(3, ((0, 1), (1, 2)))

    def test_missing_vertex_line(self):
        with pytest.raises(GraphParseError) as exc_info:
            from_text("")
        assert exc_info.value.line == 1

    def test_edge_before_vertex_line(self):
        with pytest.raises(GraphParseError) as exc_info:
            from_text("e 0 1\nv 2\n")
        assert exc_info.value.line == 1

    def test_line_number_of_bad_edge(self):
        with pytest.raises(GraphParseError) as exc_info:
            from_text("v 3\ne 0 1\ne 1 7\n")
        assert exc_info.value.line == 3
        assert str(exc_info.value).startswith("line 3:")

    def test_duplicate_edge(self):
        with pytest.raises(GraphParseError) as exc_info:
            from_text("v 3\ne 0 1\ne 1 0\n")
        assert exc_info.value.line == 3

    def test_non_integer(self):
        with pytest.raises(GraphParseError, match="expected integers"):
            from_text("v three\n")

    def test_unknown_record(self):
        with pytest.raises(GraphParseError, match="unknown record"):
            from_text("v 2\nx 0 1\n")

    def test_duplicate_vertex_line(self):
        with pytest.raises(GraphParseError) as exc_info:
            from_text("v 2\nv 3\n")
        assert exc_info.value.line == 2


class TestJsonFormat:
    def test_shape(self, triangle):
        assert json.loads(to_json(triangle)) == {"v": 3, "edges": [[0, 1], [0, 2], [1, 2]]}

    def test_round_trip(self, quad_with_diagonal):
        assert from_json(to_json(quad_with_diagonal)) == quad_with_diagonal

    def test_invalid_edge_reported_as_parse_error(self):
        with pytest.raises(GraphParseError):
            from_json('{"v": 2, "edges": [[0, 5]]}')

    def test_malformed_json(self):
        with pytest.raises(GraphParseError):
            from_json('{"v": "many"}')


class TestLoads:
    def test_detects_json(self, triangle):
        assert loads("  " + to_json(triangle)) == triangle

    def test_detects_text(self, triangle):
        assert loads(to_text(triangle)) == triangle
