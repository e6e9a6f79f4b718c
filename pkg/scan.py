"""Scan over graph streams: exact solvers, constructions, verification."""

import json
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, List, Optional, Sequence

import networkx as nx

from constructive import (
    color_quadrangulation,
    fum_color,
    fum_edge_color_2connected,
)
from embedding import PlaneGraph, classify, outer_choices
from errors import InternalError, InvalidParameter, SolverTimeout
from exact import chi_fum, chi_fum_edge, find_fum_edge_coloring, find_fum_vertex_coloring
from fumcheck import check_fum_edge, check_fum_vertex
from graph_io import SCHEMA_VERSION
from utils import format_duration, log

CHI = "chi"
CHI_EDGE = "chi-edge"
COLOR = "color"
COLOR_EDGE = "color-edge"
ALL_CHECKS = (CHI, CHI_EDGE, COLOR, COLOR_EDGE)


@dataclass(frozen=True)
class ScanJob:
    index: int
    graph: PlaneGraph
    checks: tuple
    max_k: int = 6
    timeout: Optional[float] = None
    all_outer: bool = False


def is_2edge_connected(g: PlaneGraph) -> bool:
    nxg = g.to_networkx()
    return g.vertex_count >= 2 and nx.is_connected(nxg) and not nx.has_bridges(nxg)


def _timed(record: dict, name: str, func, *args):
    try:
        return func(*args)
    except SolverTimeout:
        record["timed_out"].append(name)
        return None


def _confirm_candidate(record: dict, kind: str, find, g: PlaneGraph, timeout):
    """Re-solve with four colors before listing the graph as a candidate."""
    name = f"{kind}-resolve"
    witness = _timed(record, name, find, g, 4, timeout)
    if name in record["timed_out"]:
        log("WARNING", f"Graph #{record['index']}: {kind} re-solve timed out, not listed")
        return
    if witness is None:
        record["candidate"].append(kind)
        log("WARNING", f"Graph #{record['index']} has no FUM {kind} coloring with 4 colors")


def _validate_construction(record: dict, name: str, build, verify):
    try:
        colors = build()
    except SolverTimeout:
        log("WARNING", f"Graph #{record['index']}: {name} timed out")
        record["timed_out"].append(name)
        return
    except InternalError as e:
        log("ERROR", f"Graph #{record['index']}: {name} tripped {e.code}: {e}")
        record["validated"][name] = False
        record.setdefault("errors", {})[name] = e.code
        return
    ok = verify(colors) and max(colors.values(), default=0) <= 4
    record["validated"][name] = ok
    if not ok:
        log("ERROR", f"Graph #{record['index']}: {name} output failed verification")


def scan_graph(job: ScanJob) -> dict:
    """Scan one graph; returns its record (timing under `seconds`)."""
    started = time.monotonic()
    g = job.graph
    cls = classify(g)
    flags = cls.to_dict()
    flags["is_2edge_connected"] = is_2edge_connected(g)
    record = {
        "index": job.index,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "flags": flags,
        "validated": {},
        "timed_out": [],
        "candidate": [],
    }

    if CHI in job.checks:
        chi = _timed(record, CHI, chi_fum, g, job.max_k, job.timeout)
        record["chi_fum"] = chi
        if CHI not in record["timed_out"] and (chi is None or chi > 4):
            _confirm_candidate(record, "vertex", find_fum_vertex_coloring, g, job.timeout)
        if job.all_outer:
            values = []
            for h in outer_choices(g):
                values.append(_timed(record, "all-outer", chi_fum, h, job.max_k, job.timeout))
            known = [v for v in values if v is not None]
            record["outer_choices"] = {
                "faces": len(values),
                "min": min(known) if known else None,
                "max": None if None in values or not known else max(known),
            }

    if CHI_EDGE in job.checks:
        chi_edge = _timed(record, CHI_EDGE, chi_fum_edge, g, job.max_k, job.timeout)
        record["chi_fum_edge"] = chi_edge
        if (
            CHI_EDGE not in record["timed_out"]
            and flags["is_2edge_connected"]
            and (chi_edge is None or chi_edge > 4)
        ):
            _confirm_candidate(record, "edge", find_fum_edge_coloring, g, job.timeout)

    if COLOR in job.checks:
        if cls.is_subcubic or cls.is_outerplane:
            _validate_construction(
                record, "fum_color", lambda: fum_color(g), lambda c: check_fum_vertex(g, c).ok
            )
        if cls.is_quadrangulation and cls.is_bipartite:
            _validate_construction(
                record,
                "color_quadrangulation",
                lambda: color_quadrangulation(g, timeout=job.timeout),
                lambda c: check_fum_vertex(g, c).ok,
            )

    if COLOR_EDGE in job.checks and cls.is_2connected:
        _validate_construction(
            record,
            "fum_edge_color_2connected",
            lambda: fum_edge_color_2connected(g),
            lambda c: check_fum_edge(g, c).ok,
        )

    record["seconds"] = time.monotonic() - started
    return record


@dataclass
class ScanReport:
    records: List[dict] = field(default_factory=list)

    def aggregate(self) -> dict:
        chis = [r["chi_fum"] for r in self.records if r.get("chi_fum") is not None]
        edge_chis = [r["chi_fum_edge"] for r in self.records if r.get("chi_fum_edge") is not None]
        return {
            "graph_count": len(self.records),
            "max_chi_fum": max(chis, default=None),
            "max_chi_fum_edge": max(edge_chis, default=None),
            "candidates": [r["index"] for r in self.records if r["candidate"]],
            "construction_failures": [
                r["index"] for r in self.records if not all(r["validated"].values())
            ],
            "timeouts": [r["index"] for r in self.records if r["timed_out"]],
        }

    def to_dict(self, include_timing: bool = False) -> dict:
        doc = {
            "schema": SCHEMA_VERSION,
            "records": [{k: v for k, v in r.items() if k != "seconds"} for r in self.records],
            "aggregate": self.aggregate(),
        }
        if include_timing:
            doc["timing"] = {str(r["index"]): r["seconds"] for r in self.records}
        return doc

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)

    def save(self, path: str, include_timing: bool = True):
        with open(path, "w") as f:
            json.dump(self.to_dict(include_timing), f, indent=2, sort_keys=True)
        log("INFO", f"Scan report written to {path}")


def scan(
    graphs: Iterable[PlaneGraph],
    checks: Sequence[str] = (CHI,),
    parallelism: int = 1,
    max_k: int = 6,
    timeout: Optional[float] = None,
    all_outer: bool = False,
) -> ScanReport:
    """Scan every graph; record order follows the stream whatever the parallelism."""
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise InvalidParameter(f"Unknown checks: {sorted(unknown)}")
    jobs = [
        ScanJob(i, g, tuple(checks), max_k, timeout, all_outer) for i, g in enumerate(graphs)
    ]
    started = time.monotonic()
    if parallelism > 1 and len(jobs) > 1:
        with Pool(parallelism) as pool:
            records = pool.map(scan_graph, jobs)
    else:
        records = [scan_graph(job) for job in jobs]
    report = ScanReport(records)
    agg = report.aggregate()
    log(
        "INFO",
        f"Scanned {agg['graph_count']} graphs in {format_duration(time.monotonic() - started)}; "
        f"max chi_fum {agg['max_chi_fum']}, candidates {agg['candidates']}",
    )
    return report
