#!/usr/bin/env python3
"""FUM coloring toolkit - command line entry point.

Every subcommand prints one JSON document on stdout. Exit codes: 0 success,
1 verification failure / bound exceeded / timeout, 2 input error, 3 internal error.
"""

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path
from typing import List, Optional

from config import Config
from constructive import (
    color_outerplane,
    color_quadrangulation,
    color_subcubic,
    fum_edge_color_2connected,
)
from embedding import classify
from errors import FumError, InternalError, InvalidParameter
from exact import chi_fum, chi_fum_edge
from families import (
    GIRTH_EDGE,
    GIRTH_VERTEX,
    NESTED_QUAD,
    STANDARD,
    FamilySpec,
    build_family,
    resolve_family,
)
from fumcheck import check_fum_edge, check_fum_vertex, make_free_pairs
from graph_io import (
    dump_document,
    edge_coloring_to_json,
    format_rotation_text,
    graph_to_json,
    load_edge_coloring,
    load_vertex_coloring,
    read_graphs,
    to_dot,
    vertex_coloring_to_json,
    write_planar_code,
)
from scan import ALL_CHECKS, CHI, scan
from utils import log, set_debug_mode

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INTERNAL = 3


def _parse_outer(text: Optional[str]):
    if text is None:
        return None
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidParameter(f"--outer expects 'u,v', got '{text}'")
    return (u, v)


def _read_json(path: str):
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidParameter(f"{path} is not valid JSON: {e}")


def _emit(doc: dict):
    print(dump_document(doc))


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("input", help="Planar-code stream or rotation text file")
    p.add_argument("--format", choices=["auto", "planar_code", "text"], default="auto")
    p.add_argument("--index", type=int, default=0, help="Record index inside a stream")
    p.add_argument("--outer", help="Outer dart as 'u,v'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Facial unique-maximum colorings of plane graphs")
    parser.add_argument("--config", help="Config file (default: config.json if present)")
    parser.add_argument("--debug", action="store_true", help="Enable DEBUG logging")
    parser.add_argument("--max-k", type=int, help="Largest color count tried by exact solvers")
    parser.add_argument("--timeout", type=float, help="Seconds per solver call")
    parser.add_argument("--parallel", type=int, help="Worker processes for scan")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("faces", "classify", "chi", "chi-edge"):
        _add_input(sub.add_parser(name))

    p = sub.add_parser("verify-vertex")
    _add_input(p)
    p.add_argument("coloring", help="JSON vertex coloring")

    p = sub.add_parser("verify-edge")
    _add_input(p)
    p.add_argument("coloring", help="JSON edge coloring")
    p.add_argument("--free", help="JSON list of free pairs [[[u,v],[x,y]], ...]")
    p.add_argument("--exclude-outer", action="store_true")
    p.add_argument("--outer-cap", type=int)

    p = sub.add_parser("color")
    p.add_argument("variant", choices=["subcubic", "outerplane", "quadrangulation"])
    _add_input(p)
    p.add_argument("--trace", action="store_true", help="Include the reduction trace")
    p.add_argument("--force-fallback", action="store_true")

    p = sub.add_parser("color-edge")
    _add_input(p)
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("gen")
    p.add_argument("family", choices=[GIRTH_VERTEX, GIRTH_EDGE, NESTED_QUAD] + sorted(STANDARD))
    p.add_argument("parameter", type=int, nargs="?", help="Girth or size parameter")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--face", type=int, help="Inner face to nest into (default: one that stays hard)")
    p.add_argument("--alignment", type=int, help="How each nested copy is laid onto the face (0..7)")
    p.add_argument("--output", help="Write the graph here (.pc for planar code, else text)")

    p = sub.add_parser("scan")
    p.add_argument("input")
    p.add_argument("--format", choices=["auto", "planar_code", "text"], default="auto")
    p.add_argument("--outer")
    p.add_argument("--checks", default=CHI, help=f"Comma list of {','.join(ALL_CHECKS)}")
    p.add_argument("--all-outer", action="store_true")
    p.add_argument("--report", help="Also save the report (with timing) here")

    p = sub.add_parser("export-dot")
    _add_input(p)
    p.add_argument("--coloring", help="JSON vertex coloring")
    p.add_argument("--edge-coloring", help="JSON edge coloring")
    p.add_argument("--output", help="DOT file (default: inside the JSON document)")
    return parser


def _load_graph(args):
    graphs = read_graphs(args.input, args.format, _parse_outer(args.outer))
    if not 0 <= args.index < len(graphs):
        raise InvalidParameter(f"Input holds {len(graphs)} graphs, no index {args.index}")
    return graphs[args.index]


def _cmd_faces(args, config) -> int:
    g = _load_graph(args)
    # outer face first, its walk starting at the outer dart
    order = list(range(len(g.faces)))
    walks = {i: f.walk for i, f in enumerate(g.faces)}
    if g.outer_dart:
        first = g.dart_face[g.outer_dart]
        order.remove(first)
        order.insert(0, first)
        walks[first] = g.outer_walk
    faces = [
        {
            "index": i,
            "walk": [list(d) for d in walks[i]],
            "vertices": sorted(g.faces[i].vertices),
            "length": g.faces[i].length,
            "is_outer": g.faces[i].is_outer,
        }
        for i in order
    ]
    _emit({"faces": faces, "vertex_count": g.vertex_count, "edge_count": g.edge_count})
    return EXIT_OK


def _cmd_classify(args, config) -> int:
    _emit({"classify": classify(_load_graph(args)).to_dict()})
    return EXIT_OK


def _cmd_chi(args, config) -> int:
    g = _load_graph(args)
    if args.command == "chi":
        max_k, key = config.max_k_vertex, "chi_fum"
        value = chi_fum(g, max_k, config.timeout_seconds)
    else:
        max_k, key = config.max_k_edge, "chi_fum_edge"
        value = chi_fum_edge(g, max_k, config.timeout_seconds)
    _emit({key: value, "exceeded": value is None, "max_k": max_k})
    return EXIT_OK if value is not None else EXIT_FAILED


def _cmd_verify_vertex(args, config) -> int:
    g = _load_graph(args)
    verdict = check_fum_vertex(g, load_vertex_coloring(_read_json(args.coloring), g))
    _emit({"verdict": verdict.to_dict()})
    return EXIT_OK if verdict.ok else EXIT_FAILED


def _cmd_verify_edge(args, config) -> int:
    g = _load_graph(args)
    free = frozenset()
    if args.free:
        free = make_free_pairs((tuple(e), tuple(f)) for e, f in _read_json(args.free))
    verdict = check_fum_edge(
        g, load_edge_coloring(_read_json(args.coloring)), free, args.exclude_outer, args.outer_cap
    )
    _emit({"verdict": verdict.to_dict()})
    return EXIT_OK if verdict.ok else EXIT_FAILED


def _cmd_color(args, config) -> int:
    g = _load_graph(args)
    trace = [] if args.trace else None
    if args.variant == "subcubic":
        colors = color_subcubic(g, trace)
    elif args.variant == "outerplane":
        colors = color_outerplane(g, trace)
    else:
        colors = color_quadrangulation(g, args.force_fallback, config.timeout_seconds)
    verdict = check_fum_vertex(g, colors)
    doc = {
        "coloring": vertex_coloring_to_json(colors),
        "max_color": max(colors.values(), default=0),
        "verified": verdict.ok,
    }
    if trace is not None:
        doc["trace"] = [r.to_dict() for r in trace]
    _emit(doc)
    return EXIT_OK if verdict.ok else EXIT_INTERNAL


def _cmd_color_edge(args, config) -> int:
    g = _load_graph(args)
    trace = [] if args.trace else None
    colors = fum_edge_color_2connected(g, trace)
    verdict = check_fum_edge(g, colors)
    doc = {
        "coloring": edge_coloring_to_json(colors),
        "max_color": max(colors.values(), default=0),
        "verified": verdict.ok,
    }
    if trace is not None:
        doc["trace"] = [r.to_dict() for r in trace]
    _emit(doc)
    return EXIT_OK if verdict.ok else EXIT_INTERNAL


def _cmd_gen(args, config) -> int:
    resolved = None
    if args.family in STANDARD:
        maker = STANDARD[args.family]
        try:
            g = maker(args.parameter) if args.parameter is not None else maker()
        except TypeError:
            raise InvalidParameter(f"Wrong parameter for '{args.family}': {args.parameter}")
    else:
        param = args.parameter if args.parameter is not None else (4 if args.family == GIRTH_EDGE else 3)
        spec, base = resolve_family(
            FamilySpec(args.family, param, args.depth, args.face, args.alignment),
            max_n=config.enumerator_max_vertices,
            timeout=config.timeout_seconds,
            parallelism=config.parallel,
        )
        g = build_family(spec, base)
        resolved = asdict(spec)
    if args.output:
        path = Path(args.output)
        if path.suffix == ".pc":
            path.write_bytes(write_planar_code([g]))
        else:
            path.write_text(format_rotation_text(g))
        log("INFO", f"Wrote {args.family} graph to {path}")
    doc = {"family": args.family, "graph": graph_to_json(g), "text": format_rotation_text(g)}
    if resolved is not None:
        doc["spec"] = resolved
    _emit(doc)
    return EXIT_OK


def _cmd_scan(args, config) -> int:
    graphs = read_graphs(args.input, args.format, _parse_outer(args.outer))
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    report = scan(
        graphs,
        checks,
        parallelism=config.parallel,
        max_k=config.max_k_vertex,
        timeout=config.timeout_seconds,
        all_outer=args.all_outer,
    )
    if args.report:
        report.save(args.report)
    print(report.to_json())
    agg = report.aggregate()
    if agg["construction_failures"]:
        return EXIT_INTERNAL
    return EXIT_FAILED if agg["candidates"] else EXIT_OK


def _cmd_export_dot(args, config) -> int:
    g = _load_graph(args)
    vertex_colors = load_vertex_coloring(_read_json(args.coloring), g) if args.coloring else None
    edge_colors = load_edge_coloring(_read_json(args.edge_coloring)) if args.edge_coloring else None
    dot = to_dot(g, config.dot_palette, vertex_colors, edge_colors)
    if args.output:
        Path(args.output).write_text(dot)
        _emit({"dot_file": args.output})
    else:
        _emit({"dot": dot})
    return EXIT_OK


COMMANDS = {
    "faces": _cmd_faces,
    "classify": _cmd_classify,
    "chi": _cmd_chi,
    "chi-edge": _cmd_chi,
    "verify-vertex": _cmd_verify_vertex,
    "verify-edge": _cmd_verify_edge,
    "color": _cmd_color,
    "color-edge": _cmd_color_edge,
    "gen": _cmd_gen,
    "scan": _cmd_scan,
    "export-dot": _cmd_export_dot,
}


def run_subcommand(argv: List[str]) -> int:
    """Run one subcommand; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        config = Config(
            args.config,
            overrides={
                "max_k_vertex": args.max_k,
                "max_k_edge": args.max_k,
                "timeout_seconds": args.timeout,
                "parallel": args.parallel,
                "debug_mode": True if args.debug else None,
            },
        )
        set_debug_mode(config.debug_mode)
        return COMMANDS[args.command](args, config)
    except FumError as e:
        level = "ERROR" if isinstance(e, InternalError) else "WARNING"
        log(level, f"{args.command}: {e}")
        _emit({"error": e.to_dict()})
        return e.exit_code
    except OSError as e:
        log("ERROR", f"{args.command}: {e}")
        _emit({"error": {"code": "io_error", "message": str(e)}})
        return 2
    except Exception as e:
        log("ERROR", f"Fatal: {e}")
        _emit({"error": {"code": "internal_error", "message": str(e)}})
        return EXIT_INTERNAL


def main():
    sys.exit(run_subcommand(sys.argv[1:]))


if __name__ == "__main__":
    main()
