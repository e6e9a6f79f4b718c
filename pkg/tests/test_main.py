import json

import pytest

from embedding import cycle_graph
from families import gen_girth_vertex_family, k4
from graph_io import format_rotation_text, read_graphs
from main import build_parser, run_subcommand


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "c5.txt").write_text(format_rotation_text(cycle_graph(5)))
    (tmp_path / "c4.txt").write_text(format_rotation_text(cycle_graph(4)))
    (tmp_path / "k4.txt").write_text(format_rotation_text(k4()))
    return tmp_path


def run(capsys, *argv):
    code = run_subcommand(list(argv))
    return code, json.loads(capsys.readouterr().out)


class TestExactCommands:
    def test_chi(self, workdir, capsys):
        code, doc = run(capsys, "chi", "c5.txt")
        assert code == 0
        assert doc == {"schema": 1, "chi_fum": 3, "exceeded": False, "max_k": 6}

    def test_chi_exceeded(self, workdir, capsys):
        code, doc = run(capsys, "--max-k", "3", "chi", "k4.txt")
        assert code == 1
        assert doc["exceeded"] is True and doc["chi_fum"] is None

    def test_chi_edge(self, workdir, capsys):
        code, doc = run(capsys, "chi-edge", "c4.txt")
        assert code == 0
        assert doc["chi_fum_edge"] == 3


class TestInspection:
    def test_faces(self, workdir, capsys):
        code, doc = run(capsys, "faces", "k4.txt")
        assert code == 0
        assert len(doc["faces"]) == 4
        assert doc["faces"][0]["is_outer"] is True
        assert doc["faces"][0]["walk"][0] == [1, 0]
        assert doc["faces"][0]["index"] == k4().dart_face[(1, 0)]
        assert sorted(f["index"] for f in doc["faces"]) == [0, 1, 2, 3]

    def test_classify(self, workdir, capsys):
        code, doc = run(capsys, "classify", "c4.txt")
        assert code == 0
        assert doc["classify"]["is_quadrangulation"] is True

    def test_outer_override(self, workdir, capsys):
        code, doc = run(capsys, "faces", "c5.txt", "--outer", "1,0")
        assert code == 0
        assert doc["faces"][0]["walk"][0] == [1, 0]


class TestVerify:
    def test_vertex_ok(self, workdir, capsys):
        (workdir / "c.json").write_text(json.dumps([3, 1, 2, 1, 2]))
        code, doc = run(capsys, "verify-vertex", "c5.txt", "c.json")
        assert code == 0 and doc["verdict"]["ok"] is True

    def test_vertex_failing(self, workdir, capsys):
        (workdir / "c.json").write_text(json.dumps([1, 2, 1, 2]))
        code, doc = run(capsys, "verify-vertex", "c4.txt", "c.json")
        assert code == 1
        assert doc["verdict"]["violations"][0]["kind"] == "vertex_max_not_unique"

    def test_edge_with_free_pair(self, workdir, capsys):
        (workdir / "e.json").write_text(json.dumps([[0, 1, 1], [1, 2, 1], [2, 3, 2], [0, 3, 3]]))
        (workdir / "free.json").write_text(json.dumps([[[0, 1], [1, 2]]]))
        code, _ = run(capsys, "verify-edge", "c4.txt", "e.json")
        assert code == 1
        code, doc = run(capsys, "verify-edge", "c4.txt", "e.json", "--free", "free.json")
        assert code == 0 and doc["verdict"]["ok"] is True

    def test_partial_coloring_is_input_error(self, workdir, capsys):
        (workdir / "c.json").write_text(json.dumps([1, 2]))
        code, doc = run(capsys, "verify-vertex", "c4.txt", "c.json")
        assert code == 2
        assert doc["error"]["code"] == "partial_coloring"


class TestConstructions:
    def test_color_subcubic(self, workdir, capsys):
        code, doc = run(capsys, "color", "subcubic", "k4.txt", "--trace")
        assert code == 0
        assert doc["verified"] is True
        assert doc["max_color"] <= 4
        assert isinstance(doc["trace"], list)

    def test_color_quadrangulation(self, workdir, capsys):
        code, doc = run(capsys, "color", "quadrangulation", "c4.txt", "--force-fallback")
        assert code == 0 and doc["verified"] is True

    def test_wrong_class(self, workdir, capsys):
        code, doc = run(capsys, "color", "outerplane", "k4.txt")
        assert code == 2
        assert doc["error"]["code"] == "not_applicable"

    def test_color_edge(self, workdir, capsys):
        code, doc = run(capsys, "color-edge", "k4.txt")
        assert code == 0
        assert doc["verified"] is True
        assert len(doc["coloring"]) == 6


class TestGenerators:
    def test_girth_vertex_to_planar_code(self, workdir, capsys):
        code, doc = run(capsys, "gen", "girth-vertex", "4", "--output", "gv4.pc")
        assert code == 0
        assert doc["graph"]["vertex_count"] == 10
        [g] = read_graphs(str(workdir / "gv4.pc"))
        assert g.rotation == gen_girth_vertex_family(4).rotation

    def test_standard_family(self, workdir, capsys):
        code, doc = run(capsys, "gen", "wheel", "5")
        assert code == 0
        assert doc["graph"]["vertex_count"] == 6
        code, doc = run(capsys, "gen", "cube")
        assert doc["graph"]["vertex_count"] == 8

    def test_odd_girth(self, workdir, capsys):
        code, doc = run(capsys, "gen", "girth-edge", "5")
        assert code == 2
        assert doc["error"]["code"] == "odd_girth"

    def test_text_output_reads_back(self, workdir, capsys):
        run(capsys, "gen", "k4", "--output", "k4_gen.txt")
        assert read_graphs(str(workdir / "k4_gen.txt")) == [k4()]


class TestScanAndExport:
    def test_scan_fixture(self, workdir, capsys, fixtures_dir):
        report_path = workdir / "report.json"
        code, doc = run(
            capsys, "scan", str(fixtures_dir / "small.pc"), "--checks", "chi,color", "--report", str(report_path)
        )
        assert code == 0
        assert [r["chi_fum"] for r in doc["records"]] == [3, 4, 3]
        assert "timing" in json.loads(report_path.read_text())

    def test_export_dot(self, workdir, capsys):
        (workdir / "c.json").write_text(json.dumps([3, 1, 2, 1, 2]))
        code, doc = run(capsys, "export-dot", "c5.txt", "--coloring", "c.json")
        assert code == 0
        assert doc["dot"].startswith("graph G {")
        code, doc = run(capsys, "export-dot", "c5.txt", "--output", "c5.dot")
        assert doc == {"schema": 1, "dot_file": "c5.dot"}
        assert (workdir / "c5.dot").read_text().count(" -- ") == 5


class TestErrors:
    def test_missing_file(self, workdir, capsys):
        code, doc = run(capsys, "chi", "nope.txt")
        assert code == 2
        assert doc["error"]["code"] == "io_error"

    def test_missing_config(self, workdir, capsys):
        code, doc = run(capsys, "--config", "absent.json", "chi", "c5.txt")
        assert code == 2
        assert doc["error"]["code"] == "config_error"

    def test_bad_index(self, workdir, capsys):
        code, doc = run(capsys, "chi", "c5.txt", "--index", "3")
        assert code == 2
        assert doc["error"]["code"] == "invalid_parameter"

    def test_parser_requires_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
