import json

import networkx as nx
import pytest

from embedding import classify, cycle_graph
from errors import (
    BadHeader,
    EmbeddingInvalid,
    InvalidParameter,
    NeighborOutOfRange,
    PartialColoring,
    TruncatedRecord,
)
from families import cube, k4
from graph_io import (
    PLANAR_CODE_HEADER,
    dump_document,
    edge_coloring_to_json,
    format_rotation_text,
    from_networkx,
    graph_to_json,
    load_edge_coloring,
    load_vertex_coloring,
    parse_planar_code,
    parse_rotation_text,
    read_graphs,
    to_dot,
    vertex_coloring_to_json,
    write_planar_code,
)


class TestPlanarCode:
    def test_fixture_stream(self, fixtures_dir):
        graphs = read_graphs(str(fixtures_dir / "small.pc"))
        assert [g.vertex_count for g in graphs] == [3, 4, 4]
        assert graphs[0] == cycle_graph(3)
        assert graphs[1].edge_count == 6
        assert graphs[1].outer_dart == (0, 1)

    def test_bytes_survive_rewrite(self, fixtures_dir):
        data = (fixtures_dir / "small.pc").read_bytes()
        assert write_planar_code(parse_planar_code(data)) == data

    def test_header_only(self):
        assert parse_planar_code(PLANAR_CODE_HEADER) == []

    def test_bad_header(self):
        with pytest.raises(BadHeader):
            parse_planar_code(b"planar_code\x03")

    def test_truncated(self):
        with pytest.raises(TruncatedRecord):
            parse_planar_code(PLANAR_CODE_HEADER + b"\x03\x02\x03\x00\x03")

    def test_neighbor_out_of_range(self):
        with pytest.raises(NeighborOutOfRange):
            parse_planar_code(PLANAR_CODE_HEADER + b"\x02\x05\x00\x01\x00")

    def test_invalid_embedding_names_record(self, fixtures_dir):
        with pytest.raises(EmbeddingInvalid) as info:
            read_graphs(str(fixtures_dir / "bad_euler.pc"))
        assert info.value.index == 0
        assert info.value.to_dict()["code"] == "embedding_invalid"

    def test_outer_override(self, fixtures_dir):
        graphs = read_graphs(str(fixtures_dir / "small.pc"), outer=(1, 0))
        assert all(g.outer_dart == (1, 0) for g in graphs)

    def test_write_rejects_empty_graph(self):
        from embedding import empty_graph

        with pytest.raises(InvalidParameter):
            write_planar_code([empty_graph()])


class TestRotationText:
    def test_fixture_is_k4(self, fixtures_dir):
        assert read_graphs(str(fixtures_dir / "k4.txt")) == [k4()]

    def test_normalized_text(self):
        text = format_rotation_text(k4())
        assert text.splitlines()[0] == "n 4"
        assert text.splitlines()[-1] == "outer 1 0"
        assert parse_rotation_text(text) == k4()
        assert format_rotation_text(parse_rotation_text(text)) == text

    def test_missing_header(self):
        with pytest.raises(BadHeader):
            parse_rotation_text("0: 1\n1: 0\n")

    def test_bad_integer(self):
        with pytest.raises(InvalidParameter):
            parse_rotation_text("n 2\n0: x\n1: 0\n")

    def test_vertex_listed_twice(self):
        with pytest.raises(InvalidParameter):
            parse_rotation_text("n 2\n0: 1\n0: 1\n1: 0\n")

    def test_unknown_format(self, fixtures_dir):
        with pytest.raises(InvalidParameter):
            read_graphs(str(fixtures_dir / "k4.txt"), fmt="graph6")


class TestColoringDocuments:
    def test_vertex_forms(self):
        assert load_vertex_coloring({"0": 1, "1": 2}) == {0: 1, 1: 2}
        assert load_vertex_coloring([3, 1, 2]) == {0: 3, 1: 1, 2: 2}
        assert load_vertex_coloring({"coloring": [1, 2]}) == {0: 1, 1: 2}

    def test_vertex_round_trip(self):
        c = {0: 3, 1: 1, 2: 2}
        assert load_vertex_coloring(vertex_coloring_to_json(c)) == c

    def test_vertex_partial(self):
        with pytest.raises(PartialColoring) as info:
            load_vertex_coloring([1, 2], cycle_graph(3))
        assert info.value.details == {"missing": [2]}

    def test_vertex_garbage(self):
        with pytest.raises(InvalidParameter):
            load_vertex_coloring({"a": 1})

    def test_edge_forms(self):
        assert load_edge_coloring([[1, 0, 2]]) == {(0, 1): 2}
        assert load_edge_coloring({"2-1": 3}) == {(1, 2): 3}
        c = {(0, 1): 1, (1, 2): 2}
        assert load_edge_coloring(edge_coloring_to_json(c)) == c

    def test_edge_garbage(self):
        with pytest.raises(InvalidParameter):
            load_edge_coloring([[0, 1]])

    def test_document_has_schema(self):
        doc = json.loads(dump_document({"chi_fum": 3}))
        assert doc == {"schema": 1, "chi_fum": 3}

    def test_graph_json(self):
        doc = graph_to_json(cycle_graph(3))
        assert doc["vertex_count"] == 3
        assert doc["outer_dart"] == [0, 1]


class TestDot:
    def test_colored_vertices_and_edges(self):
        g = cycle_graph(3)
        text = to_dot(g, ["red", "green", "blue"], {0: 1, 1: 2, 2: 3}, {(0, 1): 4})
        assert text.startswith("graph G {")
        assert '0 [label="0:1", style=filled, fillcolor="red"];' in text
        assert '0 -- 1 [label="4", color="red", penwidth=2];' in text
        assert "1 -- 2;" in text

    def test_plain(self):
        text = to_dot(cube(), ["red"])
        assert text.count(" -- ") == 12


class TestFromNetworkx:
    def test_cycle(self):
        g = from_networkx(nx.cycle_graph(5))
        assert g.vertex_count == 5
        assert [f.length for f in g.faces] == [5, 5]

    def test_octahedron_faces_are_triangles(self):
        g = from_networkx(nx.octahedral_graph())
        assert len(g.faces) == 8
        assert all(f.length == 3 for f in g.faces)

    def test_tuple_nodes_are_renumbered(self):
        g = from_networkx(nx.hypercube_graph(3))
        assert g.vertex_count == 8
        assert len(g.faces) == 6
        assert classify(g).is_quadrangulation

    def test_isolated_node(self):
        nxg = nx.path_graph(3)
        nxg.add_node(3)
        g = from_networkx(nxg)
        assert g.vertex_count == 4 and g.edge_count == 2
        assert len(g.components) == 2

    def test_non_planar(self):
        with pytest.raises(InvalidParameter):
            from_networkx(nx.complete_graph(5))
