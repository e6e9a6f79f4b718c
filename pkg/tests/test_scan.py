import json

import pytest

import exact
import scan as scan_module
from embedding import cycle_graph, path_graph
from errors import InvalidParameter, SolverTimeout
from families import cube, domino, k4
from scan import (
    ALL_CHECKS,
    CHI,
    CHI_EDGE,
    COLOR,
    COLOR_EDGE,
    ScanJob,
    is_2edge_connected,
    scan,
    scan_graph,
)


def small_stream():
    return [cycle_graph(3), k4(), path_graph(4), cube(), domino()]


class TestScanGraph:
    def test_chi_record(self):
        record = scan_graph(ScanJob(0, k4(), (CHI,)))
        assert record["chi_fum"] == 4
        assert record["candidate"] == []
        assert record["flags"]["is_2connected"] is True
        assert record["seconds"] >= 0

    def test_constructions_are_validated(self):
        record = scan_graph(ScanJob(3, cube(), ALL_CHECKS))
        assert record["validated"] == {
            "fum_color": True,
            "color_quadrangulation": True,
            "fum_edge_color_2connected": True,
        }
        assert record["chi_fum_edge"] is not None

    def test_path_skips_edge_construction(self):
        record = scan_graph(ScanJob(0, path_graph(4), (CHI_EDGE, COLOR_EDGE)))
        assert record["chi_fum_edge"] == 2
        assert record["validated"] == {}
        assert record["flags"]["is_2edge_connected"] is False

    def test_all_outer_choices(self):
        record = scan_graph(ScanJob(0, cycle_graph(5), (CHI,), all_outer=True))
        assert record["outer_choices"] == {"faces": 2, "min": 3, "max": 3}

    def test_two_edge_connected(self):
        assert is_2edge_connected(cube())
        assert not is_2edge_connected(path_graph(3))


class TestScan:
    def test_order_and_aggregate(self):
        report = scan(small_stream(), checks=(CHI, COLOR))
        assert [r["index"] for r in report.records] == [0, 1, 2, 3, 4]
        agg = report.aggregate()
        assert agg["graph_count"] == 5
        assert agg["max_chi_fum"] == 4
        assert agg["candidates"] == []
        assert agg["construction_failures"] == []

    def test_parallel_matches_serial(self):
        serial = scan(small_stream(), checks=(CHI,)).to_dict()
        parallel = scan(small_stream(), checks=(CHI,), parallelism=2).to_dict()
        assert serial == parallel

    def test_unknown_check(self):
        with pytest.raises(InvalidParameter):
            scan([k4()], checks=("color-everything",))

    def test_empty_stream(self):
        agg = scan([]).aggregate()
        assert agg["graph_count"] == 0
        assert agg["max_chi_fum"] is None

    def test_timing_kept_out_of_records(self):
        doc = json.loads(scan([k4()]).to_json(include_timing=True))
        assert doc["schema"] == 1
        assert "seconds" not in doc["records"][0]
        assert set(doc["timing"]) == {"0"}

    def test_save(self, tmp_path):
        out = tmp_path / "report.json"
        scan([cycle_graph(4)]).save(str(out))
        doc = json.loads(out.read_text())
        assert doc["records"][0]["chi_fum"] == 3
        assert "timing" in doc


class TestTimeouts:
    def test_construction_timeout_is_recorded(self, monkeypatch):
        monkeypatch.setattr(exact, "_TICK_INTERVAL", 1)
        report = scan([cube()], checks=(COLOR,), timeout=1e-9)
        record = report.records[0]
        assert "color_quadrangulation" in record["timed_out"]
        assert "color_quadrangulation" not in record["validated"]
        assert report.aggregate()["timeouts"] == [0]
        assert report.aggregate()["construction_failures"] == []

    def test_resolve_timeout_is_not_a_candidate(self, monkeypatch):
        def slow(g, k, timeout=None):
            raise SolverTimeout("budget")

        monkeypatch.setattr(scan_module, "chi_fum", lambda g, max_k, timeout: None)
        monkeypatch.setattr(scan_module, "find_fum_vertex_coloring", slow)
        record = scan_graph(ScanJob(0, k4(), (CHI,)))
        assert record["candidate"] == []
        assert record["timed_out"] == ["vertex-resolve"]

    def test_failed_resolve_lists_candidate(self, monkeypatch):
        monkeypatch.setattr(scan_module, "chi_fum", lambda g, max_k, timeout: None)
        monkeypatch.setattr(scan_module, "find_fum_vertex_coloring", lambda g, k, timeout=None: None)
        assert scan_graph(ScanJob(0, k4(), (CHI,)))["candidate"] == ["vertex"]
