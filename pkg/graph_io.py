"""Graph and coloring formats: planar code, rotation text, networkx, JSON documents, DOT."""

import json
from pathlib import Path
from typing import Iterable, List, Mapping, Optional, Sequence

import networkx as nx

from embedding import Dart, Edge, PlaneGraph, build_plane_graph, edge_key
from errors import (
    BadHeader,
    EmbeddingInvalid,
    InputError,
    InvalidParameter,
    NeighborOutOfRange,
    PartialColoring,
    TruncatedRecord,
)
from fumcheck import EdgeColoring, VertexColoring

PLANAR_CODE_HEADER = b">>planar_code<<"
SCHEMA_VERSION = 1


def _default_outer(rows: Sequence[Sequence[int]]) -> Optional[Dart]:
    for v, rot in enumerate(rows):
        if rot:
            return (v, rot[0])
    return None


# --- planar code ---


def parse_planar_code(data: bytes, outer: Optional[Dart] = None) -> List[PlaneGraph]:
    """Decode a planar-code stream (1-based neighbour bytes, 0-terminated lists).

    Each graph gets `outer` as outer dart, or (0, first neighbour of 0).
    """
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader("Stream does not start with >>planar_code<<")
    graphs = []
    pos = len(PLANAR_CODE_HEADER)
    index = 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise BadHeader(
                f"Record {index} uses the wide format (more than 255 vertices)", {"record": index}
            )
        rows = []
        for v in range(n):
            rot = []
            while True:
                if pos >= len(data):
                    raise TruncatedRecord(
                        f"Record {index} ends inside the list of vertex {v + 1}", {"record": index}
                    )
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise NeighborOutOfRange(
                        f"Record {index}: vertex {v + 1} lists neighbour {b} > {n}", {"record": index}
                    )
                rot.append(b - 1)
            rows.append(rot)
        try:
            graphs.append(build_plane_graph(n, rows, outer or _default_outer(rows)))
        except InputError as e:
            raise EmbeddingInvalid(f"Record {index}: {e}", index)
        index += 1
    return graphs


def write_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for g in graphs:
        if not 1 <= g.vertex_count <= 255:
            raise InvalidParameter(f"Planar code records hold 1..255 vertices, got {g.vertex_count}")
        out.append(g.vertex_count)
        for rot in g.rotation:
            out.extend(w + 1 for w in rot)
            out.append(0)
    return bytes(out)


# --- rotation text ---


def format_rotation_text(g: PlaneGraph) -> str:
    """Normalized text form: `n <count>`, one `<v>: <neighbours>` line per vertex, `outer u v` lines."""
    lines = [f"n {g.vertex_count}"]
    for v, rot in enumerate(g.rotation):
        lines.append(f"{v}: {' '.join(map(str, rot))}".rstrip())
    darts = ([g.outer_dart] if g.outer_dart else []) + list(g.component_outer)
    lines += [f"outer {u} {v}" for u, v in darts]
    return "\n".join(lines) + "\n"


def parse_rotation_text(text: str, outer: Optional[Dart] = None) -> PlaneGraph:
    """Parse the rotation text format; `#` starts a comment. `outer` overrides the file."""
    count = None
    rows = {}
    darts: List[Dart] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if count is None:
                if parts[0] != "n" or len(parts) != 2:
                    raise BadHeader(f"Line {lineno}: expected 'n <count>'")
                count = int(parts[1])
            elif parts[0] == "outer":
                if len(parts) != 3:
                    raise InvalidParameter(f"Line {lineno}: expected 'outer <u> <v>'")
                darts.append((int(parts[1]), int(parts[2])))
            else:
                head, sep, tail = line.partition(":")
                if not sep:
                    raise InvalidParameter(f"Line {lineno}: expected '<v>: <neighbours>'")
                v = int(head)
                if v in rows:
                    raise InvalidParameter(f"Line {lineno}: vertex {v} listed twice")
                rows[v] = [int(x) for x in tail.split()]
        except ValueError:
            raise InvalidParameter(f"Line {lineno}: not an integer in '{line}'")
    if count is None:
        raise BadHeader("Missing 'n <count>' line")
    if outer is not None:
        darts = [outer]
    return build_plane_graph(count, rows, darts[0] if darts else _default_outer(
        [rows.get(v, []) for v in range(count)]
    ), darts[1:])


def read_graphs(path: str, fmt: str = "auto", outer: Optional[Dart] = None) -> List[PlaneGraph]:
    """Read a planar-code stream or a rotation text file."""
    data = Path(path).read_bytes()
    if fmt == "auto":
        fmt = "planar_code" if data.startswith(PLANAR_CODE_HEADER) else "text"
    if fmt == "planar_code":
        return parse_planar_code(data, outer)
    if fmt == "text":
        return [parse_rotation_text(data.decode("utf-8"), outer)]
    raise InvalidParameter(f"Unknown input format '{fmt}'")


# --- networkx ---


def from_networkx(nxg: nx.Graph, outer: Optional[Dart] = None) -> PlaneGraph:
    """Plane graph embedded by `nx.check_planarity`; nodes are renumbered in sorted order."""
    is_planar, emb = nx.check_planarity(nxg)
    if not is_planar:
        raise InvalidParameter("Graph is not planar")
    nodes = sorted(nxg.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    rows = [[index[w] for w in emb.neighbors_cw_order(v)] if v in emb else [] for v in nodes]
    return build_plane_graph(len(nodes), rows, outer or _default_outer(rows))


# --- colorings as JSON ---


def vertex_coloring_to_json(c: Mapping[int, int]) -> dict:
    return {str(v): c[v] for v in sorted(c)}


def edge_coloring_to_json(c: Mapping[Edge, int]) -> list:
    return [[u, v, c[(u, v)]] for u, v in sorted(c)]


def load_vertex_coloring(obj, g: Optional[PlaneGraph] = None) -> VertexColoring:
    """Accepts {"v": color} or a list of colors indexed by vertex."""
    if isinstance(obj, dict) and "coloring" in obj:
        obj = obj["coloring"]
    try:
        if isinstance(obj, list):
            c = {v: int(col) for v, col in enumerate(obj)}
        else:
            c = {int(v): int(col) for v, col in obj.items()}
    except (TypeError, ValueError, AttributeError):
        raise InvalidParameter("Vertex coloring must map vertex ids to integers")
    if g is not None:
        missing = [v for v in g.vertices() if v not in c]
        if missing:
            raise PartialColoring(f"Vertices without a color: {missing}", {"missing": missing})
    return c


def load_edge_coloring(obj) -> EdgeColoring:
    """Accepts [[u, v, color], ...] or {"u-v": color}."""
    if isinstance(obj, dict) and "coloring" in obj:
        obj = obj["coloring"]
    try:
        if isinstance(obj, list):
            return {edge_key(int(u), int(v)): int(col) for u, v, col in obj}
        out = {}
        for key, col in obj.items():
            u, v = key.split("-")
            out[edge_key(int(u), int(v))] = int(col)
        return out
    except (TypeError, ValueError, AttributeError):
        raise InvalidParameter("Edge coloring must be a list of [u, v, color] triples")


def dump_document(doc: dict) -> str:
    """Stable JSON text with the schema version field."""
    return json.dumps({"schema": SCHEMA_VERSION, **doc}, indent=2, sort_keys=True)


def graph_to_json(g: PlaneGraph) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "rotation": [list(r) for r in g.rotation],
        "outer_dart": list(g.outer_dart) if g.outer_dart else None,
    }


# --- DOT ---


def to_dot(
    g: PlaneGraph,
    palette: Sequence[str],
    vertex_colors: Optional[Mapping[int, int]] = None,
    edge_colors: Optional[Mapping[Edge, int]] = None,
    name: str = "G",
) -> str:
    """Graphviz text with colors as labels and fill colors from the palette."""

    def paint(col: int) -> str:
        return palette[(col - 1) % len(palette)]

    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices():
        if vertex_colors and v in vertex_colors:
            col = vertex_colors[v]
            lines.append(f'  {v} [label="{v}:{col}", style=filled, fillcolor="{paint(col)}"];')
        else:
            lines.append(f'  {v} [label="{v}"];')
    for u, v in g.edges:
        if edge_colors and (u, v) in edge_colors:
            col = edge_colors[(u, v)]
            lines.append(f'  {u} -- {v} [label="{col}", color="{paint(col)}", penwidth=2];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
