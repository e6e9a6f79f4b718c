"""Graph families: tight examples, standard plane graphs, quadrangulation
enumeration and nesting, and symbolic lower-bound checks."""

from dataclasses import dataclass, replace
from itertools import islice
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from embedding import (
    Dart,
    PlaneGraph,
    build_plane_graph,
    canonical_code,
    classify,
    cycle_graph,
    join_at_vertex,
    mirror,
    path_graph,
)
from errors import (
    FaceNotQuadrilateral,
    InputError,
    InvalidParameter,
    OddGirth,
    OuterBoundaryNotC4,
    SolverTimeout,
)
from exact import chi_fum
from utils import log

GIRTH_VERTEX = "girth-vertex"
GIRTH_EDGE = "girth-edge"
NESTED_QUAD = "nested-quad"

ALIGNMENTS = 8


# --- standard plane graphs ---


def wheel(n: int) -> PlaneGraph:
    """Rim 0..n-1 as outer face, hub n inside."""
    if n < 3:
        raise InvalidParameter("A wheel needs a rim of at least 3 vertices")
    hub = n
    rows = [((i + 1) % n, (i - 1) % n, hub) for i in range(n)]
    rows.append(tuple(range(n - 1, -1, -1)))
    return build_plane_graph(n + 1, rows, (1, 0))


def k4() -> PlaneGraph:
    return wheel(3)


def prism(n: int) -> PlaneGraph:
    """Outer rim 0..n-1, inner rim n..2n-1, spokes i -- n+i."""
    if n < 3:
        raise InvalidParameter("A prism needs rims of at least 3 vertices")
    rows = [((i + 1) % n, (i - 1) % n, n + i) for i in range(n)]
    rows += [(i, n + (i - 1) % n, n + (i + 1) % n) for i in range(n)]
    return build_plane_graph(2 * n, rows, (1, 0))


def cube() -> PlaneGraph:
    return prism(4)


def octahedron() -> PlaneGraph:
    """4-cycle 0..3 with poles 4 (inside) and 5 (outside)."""
    north, south = 4, 5
    rows = [((i + 1) % 4, south, (i - 1) % 4, north) for i in range(4)]
    rows.append((3, 2, 1, 0))
    rows.append((0, 1, 2, 3))
    return build_plane_graph(6, rows, (1, 0))


def domino() -> PlaneGraph:
    return gen_girth_edge_family(4)


STANDARD: Dict[str, Callable[..., PlaneGraph]] = {
    "cycle": cycle_graph,
    "path": path_graph,
    "wheel": wheel,
    "prism": prism,
    "cube": cube,
    "k4": k4,
    "octahedron": octahedron,
}


# --- tight families ---


def gen_girth_vertex_family(g: int) -> PlaneGraph:
    """Three g-cycles in a chain; consecutive cycles share one vertex.

    Outerplane, girth g, four faces, and no vertex lies on all three inner faces.
    """
    if not isinstance(g, int) or g < 3:
        raise InvalidParameter(f"Girth parameter must be at least 3, got {g!r}")
    chain = join_at_vertex(cycle_graph(g), 0, cycle_graph(g), 0)
    # vertex 1 of the second cycle is now g
    return join_at_vertex(chain, g, cycle_graph(g), 0)


def gen_girth_edge_family(g: int) -> PlaneGraph:
    """Two g-cycles sharing the edge 0-1; the second runs 1, g, g+1, ..., 2g-3, 0."""
    if not isinstance(g, int) or g < 4 or g % 2:
        raise OddGirth(f"Girth parameter must be even and at least 4, got {g!r}")
    n = 2 * g - 2
    path = [1] + list(range(g, n)) + [0]
    rows: List[tuple] = [()] * n
    rows[0] = (g - 1, 1, n - 1)
    rows[1] = (2, g, 0)
    for i in range(2, g):
        rows[i] = ((i + 1) % g, i - 1)
    for k in range(1, len(path) - 1):
        rows[path[k]] = (path[k + 1], path[k - 1])
    return build_plane_graph(n, rows, (0, g - 1))


# --- lower-bound checks ---


def girth_vertex_lower_bound(g: PlaneGraph) -> bool:
    """True when three colors provably cannot FUM-color g.

    With every vertex on the outer face, the unique top-colored vertex x is the
    only vertex of its color. If some inner cycle face avoids x, that face only
    sees 1 and 2 and needs a unique 2, leaving two adjacent vertices colored 1.
    """
    g.require_outer()
    if not g.edges or g.outer_vertices != frozenset(g.vertices()):
        return False
    inner = [f for f in g.faces if not f.is_outer and f.is_cycle()]
    return all(any(x not in f.vertices for f in inner) for x in g.vertices())


def girth_edge_lower_bound(g: PlaneGraph) -> bool:
    """True when three colors provably cannot FUM-edge-color g.

    Shape: two inner cycle faces sharing exactly one edge s, every other edge on
    an outer face that is a cycle. Coloring s with 3 leaves the outer cycle to
    alternate 1 and 2; otherwise one inner face has no 3 and needs a unique 2.
    """
    g.require_outer()
    inner = [f for f in g.faces if not f.is_outer]
    outer = [f for f in g.faces if f.is_outer]
    if len(inner) != 2 or len(outer) != 1 or not outer[0].is_cycle():
        return False
    a, b = inner
    if not (a.is_cycle() and b.is_cycle()):
        return False
    shared = a.edges & b.edges
    if len(shared) != 1:
        return False
    return outer[0].edges == frozenset(g.edges) - shared


# --- quadrangulations ---


def _split_vertex(g: PlaneGraph, u: int, i: int, j: int) -> PlaneGraph:
    """Split u between its neighbours a = rot[i] and b = rot[j], creating the
    4-face a-u-b-w; the neighbours strictly after b (cyclically, before a) move to w."""
    rot = g.rotation[u]
    d = len(rot)
    a, b = rot[i], rot[j]
    s = [rot[(i + k) % d] for k in range(1, (j - i) % d)]
    t = [rot[(j + k) % d] for k in range(1, (i - j) % d)]
    w = g.vertex_count
    rows = [list(r) for r in g.rotation]
    rows[u] = [a] + s + [b]
    rows.append([b] + t + [a])
    for x in t:
        rows[x] = [w if y == u else y for y in rows[x]]
    ka = rows[a].index(u)
    rows[a].insert(ka + 1, w)
    kb = rows[b].index(u)
    rows[b].insert(kb, w)
    return build_plane_graph(w + 1, rows, (0, rows[0][0]))


def enumerate_quadrangulations(max_n: int) -> List[PlaneGraph]:
    """Quadrangulations with 4..max_n vertices grown from the 4-cycle by vertex
    splitting, one per isomorphism class (reflections identified).

    Splitting inverts face contraction, so this reaches every quadrangulation
    that contracts face by face down to the 4-cycle. Larger or external sets
    come in as planar-code streams.
    """
    if max_n < 4:
        return []
    seed = cycle_graph(4)
    seen = {canonical_code(seed)}
    layer = [seed]
    found = [seed]
    for size in range(5, max_n + 1):
        grown = []
        for q in layer:
            for u in q.vertices():
                d = q.degree(u)
                for i in range(d):
                    for j in range(d):
                        if i == j:
                            continue
                        child = _split_vertex(q, u, i, j)
                        code = canonical_code(child)
                        if code not in seen:
                            seen.add(code)
                            grown.append(child)
        grown.sort(key=canonical_code)
        found += grown
        layer = grown
        log("DEBUG", f"{len(grown)} quadrangulations on {size} vertices")
    return found


def _hard_instance(q: PlaneGraph, index: int, timeout: Optional[float]) -> bool:
    if not classify(q).is_quadrangulation:
        return False
    try:
        chi = chi_fum(q, 4, timeout)
    except SolverTimeout:
        log("WARNING", f"Quadrangulation #{index} timed out, skipped")
        return False
    if chi is None:
        log("ERROR", f"Quadrangulation #{index} needs more than 4 colors")
        return False
    return chi == 4


def _first_hard(chunk) -> Optional[Tuple[int, PlaneGraph]]:
    offset, graphs, timeout = chunk
    for i, q in enumerate(graphs):
        if _hard_instance(q, offset + i, timeout):
            return offset + i, q
    return None


def find_hard_quadrangulation(
    source: Iterable[PlaneGraph],
    budget: Optional[int] = None,
    timeout: Optional[float] = None,
    parallelism: int = 1,
) -> Optional[PlaneGraph]:
    """First quadrangulation of the stream needing four colors, within `budget` instances.

    With several workers the stream is cut into contiguous chunks, each worker
    stops at its first hit and the lowest stream index wins, so the answer is
    the one the sequential search gives.
    """
    stream = islice(source, budget)
    if parallelism > 1:
        graphs = list(stream)
        size = max(1, -(-len(graphs) // (parallelism * 4)))
        chunks = [(k, graphs[k:k + size], timeout) for k in range(0, len(graphs), size)]
        with Pool(parallelism) as pool:
            hits = [h for h in pool.map(_first_hard, chunks) if h is not None]
        hit = min(hits, key=lambda h: h[0]) if hits else None
    else:
        hit = _first_hard((0, stream, timeout))
    if hit is None:
        if budget is not None:
            log("INFO", f"No hard quadrangulation among the first {budget} instances")
        return None
    index, q = hit
    log("INFO", f"Hard quadrangulation at #{index} ({q.vertex_count} vertices)")
    return q


def _glue(host: PlaneGraph, face_index: int, q: PlaneGraph, shift: int, track: Dart):
    """Glue q into a 4-face of host, identifying q's outer boundary with the face.

    Returns the new graph and the image of dart `track` of q.
    """
    walk = [d[0] for d in host.faces[face_index].walk]
    ring = [d[0] for d in q.outer_walk]
    m: Dict[int, int] = {}
    for j, b in enumerate(ring):
        m[b] = walk[(shift - j) % 4]
    n = host.vertex_count
    interior = [v for v in q.vertices() if v not in m]
    for k, v in enumerate(interior):
        m[v] = n + k

    rows = [list(r) for r in host.rotation]
    for j, b in enumerate(ring):
        rot = q.rotation[b]
        after = ring[(j + 1) % 4]
        k = rot.index(after)
        ordered = rot[k:] + rot[:k]
        inside = [m[x] for x in ordered[1:-1]]
        a = m[b]
        prev = m[after]
        at = rows[a].index(prev)
        rows[a][at + 1:at + 1] = inside
    rows += [[m[x] for x in q.rotation[v]] for v in interior]
    glued = build_plane_graph(len(rows), rows, host.outer_dart, host.component_outer)
    return glued, (m[track[0]], m[track[1]])


def _alignments(q: PlaneGraph, track: Dart) -> List[Tuple[PlaneGraph, Dart, int]]:
    """The ALIGNMENTS ways to lay q onto a 4-face: two orientations, four shifts."""
    variants = [(q, track), (mirror(q), (track[1], track[0]))]
    return [(copy, dart, shift) for copy, dart in variants for shift in range(4)]


def nest_quadrangulation(
    q: PlaneGraph, inner_face: int, depth: int = 1, alignment: Optional[int] = None
) -> PlaneGraph:
    """Repeatedly glue a copy of q into a chosen inner 4-face.

    Each copy's outer 4-cycle is identified with the face boundary; the next
    copy goes into the copy's face corresponding to `inner_face`. `alignment`
    (0..ALIGNMENTS-1) fixes how each copy is laid onto the face; by default the
    first one giving a quadrangulation is used.
    """
    if not isinstance(depth, int) or depth < 1:
        raise InvalidParameter(f"Nesting depth must be at least 1, got {depth!r}")
    if alignment is not None and not 0 <= alignment < ALIGNMENTS:
        raise InvalidParameter(f"Alignment must be in 0..{ALIGNMENTS - 1}, got {alignment!r}")
    q.require_outer()
    outer = q.faces[q.dart_face[q.outer_dart]]
    if outer.length != 4 or not outer.is_cycle():
        raise OuterBoundaryNotC4("Outer face of the quadrangulation is not a 4-cycle")
    if not 0 <= inner_face < len(q.faces):
        raise InvalidParameter(f"No face with index {inner_face}")
    target = q.faces[inner_face]
    if target.is_outer or target.length != 4 or not target.is_cycle():
        raise FaceNotQuadrilateral(f"Face {inner_face} is not an inner 4-cycle")

    options = _alignments(q, target.walk[0])
    if alignment is not None:
        options = [options[alignment]]
    host, face = q, inner_face
    for level in range(depth):
        for copy, dart, shift in options:
            try:
                glued, image = _glue(host, face, copy, shift, dart)
            except InputError:
                continue
            if classify(glued).is_quadrangulation:
                host, face = glued, glued.dart_face[image]
                break
        else:
            raise FaceNotQuadrilateral(f"No alignment glues the copy at level {level + 1}")
    return host


def find_hard_nesting(q: PlaneGraph, timeout: Optional[float] = None) -> Optional[Tuple[int, int]]:
    """(inner face, alignment) whose depth-1 nesting of q still needs four colors."""
    seen = set()
    for face, f in enumerate(q.faces):
        if f.is_outer or f.length != 4 or not f.is_cycle():
            continue
        for alignment in range(ALIGNMENTS):
            try:
                nested = nest_quadrangulation(q, face, 1, alignment)
            except FaceNotQuadrilateral:
                continue
            code = canonical_code(nested)
            if code in seen:
                continue
            seen.add(code)
            try:
                chi = chi_fum(nested, 4, timeout)
            except SolverTimeout:
                log("WARNING", f"Nesting into face {face} (alignment {alignment}) timed out")
                continue
            log("DEBUG", f"Nesting into face {face} (alignment {alignment}): chi_fum {chi}")
            if chi == 4:
                return face, alignment
    return None


# --- family specs ---


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    girth_parameter: int = 3
    depth: int = 1
    inner_face: Optional[int] = None
    alignment: Optional[int] = None

    def validate(self):
        if self.kind == GIRTH_VERTEX and self.girth_parameter < 3:
            raise InvalidParameter("girth-vertex needs a parameter of at least 3")
        if self.kind == GIRTH_EDGE and (self.girth_parameter < 4 or self.girth_parameter % 2):
            raise OddGirth("girth-edge needs an even parameter of at least 4")
        if self.kind == NESTED_QUAD and self.depth < 1:
            raise InvalidParameter("nested-quad needs a depth of at least 1")
        if self.kind not in (GIRTH_VERTEX, GIRTH_EDGE, NESTED_QUAD):
            raise InvalidParameter(f"Unknown family '{self.kind}'")
        if self.inner_face is not None and self.inner_face < 0:
            raise InvalidParameter(f"No face with index {self.inner_face}")
        if self.alignment is not None and not 0 <= self.alignment < ALIGNMENTS:
            raise InvalidParameter(f"Alignment must be in 0..{ALIGNMENTS - 1}")


def resolve_family(
    spec: FamilySpec,
    base: Optional[PlaneGraph] = None,
    max_n: int = 10,
    timeout: Optional[float] = None,
    parallelism: int = 1,
) -> Tuple[FamilySpec, Optional[PlaneGraph]]:
    """Fill in what a nested-quad spec leaves open: the base quadrangulation and the
    face and alignment it is nested at.

    The base is `base`, or the first hard quadrangulation on at most `max_n`
    vertices (the cube when none is found). Without an explicit face, the first
    face and alignment whose depth-1 nesting keeps chi_fum = 4 is chosen.
    """
    spec.validate()
    if spec.kind != NESTED_QUAD:
        return spec, None
    if base is None:
        base = find_hard_quadrangulation(
            enumerate_quadrangulations(max_n), timeout=timeout, parallelism=parallelism
        )
        if base is None:
            log("WARNING", f"No hard quadrangulation up to {max_n} vertices, nesting the cube")
            base = cube()
    if spec.inner_face is not None:
        return spec, base
    found = find_hard_nesting(base, timeout)
    if found is None:
        inner = next(i for i, f in enumerate(base.faces) if not f.is_outer)
        log("WARNING", f"No face keeps the nesting at four colors, using face {inner}")
        return replace(spec, inner_face=inner), base
    face, alignment = found
    log("INFO", f"Nesting into face {face} with alignment {alignment} keeps chi_fum = 4")
    return replace(spec, inner_face=face, alignment=alignment), base


def build_family(
    spec: FamilySpec,
    base: Optional[PlaneGraph] = None,
    max_n: int = 10,
    timeout: Optional[float] = None,
    parallelism: int = 1,
) -> PlaneGraph:
    """Member of a family; nested quadrangulations go through resolve_family."""
    spec, base = resolve_family(spec, base, max_n, timeout, parallelism)
    if spec.kind == GIRTH_VERTEX:
        return gen_girth_vertex_family(spec.girth_parameter)
    if spec.kind == GIRTH_EDGE:
        return gen_girth_edge_family(spec.girth_parameter)
    return nest_quadrangulation(base, spec.inner_face, spec.depth, spec.alignment)


def face_membership_counts(g: PlaneGraph) -> Dict[int, int]:
    """Number of faces each vertex lies on."""
    counts = {v: 0 for v in g.vertices()}
    for f in g.faces:
        for v in f.vertices:
            counts[v] += 1
    return counts
