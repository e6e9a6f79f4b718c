"""Coloring contracts and their verifiers.

Verifiers never raise on a bad coloring; they return a Verdict listing every
violation. Only malformed input (a coloring that is not total) raises.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from embedding import Edge, FreePair, PlaneGraph, edge_key, free_pair
from errors import InvalidParameter, PartialColoring, PathNotOnOuterFace

VertexColoring = Dict[int, int]
EdgeColoring = Dict[Edge, int]
FreePairSet = FrozenSet[FreePair]


def make_free_pairs(pairs: Iterable[Tuple[Edge, Edge]]) -> FreePairSet:
    out = set()
    for e, f in pairs:
        if edge_key(*e) == edge_key(*f):
            raise InvalidParameter(f"A free pair needs two distinct edges, got {e} twice")
        out.add(free_pair(e, f))
    return frozenset(out)


def normalize_edge_coloring(c: Mapping[Tuple[int, int], int]) -> EdgeColoring:
    """Accept edge keys in either orientation."""
    return {edge_key(*e): color for e, color in c.items()}


@dataclass(frozen=True)
class PrecoloredPath:
    """At most two outer vertices with fixed colors from {1, 2, 3}."""

    vertices: Tuple[int, ...] = ()
    colors: Tuple[int, ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[Tuple[int, int]]) -> "PrecoloredPath":
        pairs = list(pairs)
        return cls(tuple(v for v, _ in pairs), tuple(col for _, col in pairs))

    def as_dict(self) -> VertexColoring:
        return dict(zip(self.vertices, self.colors))

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, g: PlaneGraph):
        if len(self.vertices) != len(self.colors) or len(self.vertices) > 2:
            raise InvalidParameter("A precolored path has at most two vertices, one color each")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidParameter("Precolored path repeats a vertex")
        for v, col in zip(self.vertices, self.colors):
            if not 0 <= v < g.vertex_count:
                raise InvalidParameter(f"Precolored vertex {v} is not in the graph")
            if col not in (1, 2, 3):
                raise InvalidParameter(f"Precolored vertex {v} has color {col}, expected 1..3")
        g.require_outer()
        for v in self.vertices:
            if v not in g.outer_vertices:
                raise PathNotOnOuterFace(f"Vertex {v} is not on the outer face")
        if len(self.vertices) == 2:
            u, v = self.vertices
            if edge_key(u, v) not in g.outer_edges:
                raise PathNotOnOuterFace(f"{u} and {v} are not adjacent along the outer face")
            if self.colors[0] == self.colors[1]:
                raise InvalidParameter("Precolored path is not properly colored")


@dataclass(frozen=True)
class Violation:
    kind: str
    items: Tuple = ()
    face: Optional[int] = None
    reason: str = ""

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "items": [list(i) if isinstance(i, tuple) else i for i in self.items]}
        if self.face is not None:
            out["face"] = self.face
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class Verdict:
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


# --- facial structure ---


def facial_adjacent_edge_pairs(g: PlaneGraph) -> Set[FreePair]:
    """Unordered pairs of distinct edges that are consecutive on some face walk."""
    pairs = set()
    for face in g.faces:
        walk = face.walk
        for i, d in enumerate(walk):
            e = edge_key(*d)
            f = edge_key(*walk[(i + 1) % len(walk)])
            if e != f:
                pairs.add(frozenset((e, f)))
    return pairs


def face_regions(g: PlaneGraph) -> List[Tuple[int, FrozenSet[int], FrozenSet[Edge], bool]]:
    """(face index, vertices, edges, is_outer) per face; all outer walks form one region."""
    regions = []
    outer_vertices: Set[int] = set()
    outer_edges: Set[Edge] = set()
    outer_index = None
    for i, face in enumerate(g.faces):
        if face.is_outer:
            outer_index = i if outer_index is None else outer_index
            outer_vertices |= face.vertices
            outer_edges |= face.edges
        else:
            regions.append((i, face.vertices, face.edges, False))
    if outer_index is not None:
        regions.insert(0, (outer_index, frozenset(outer_vertices), frozenset(outer_edges), True))
    return regions


def good_vertices(g: PlaneGraph, free: FreePairSet = frozenset()) -> FrozenSet[int]:
    """Degree-2 vertices and common vertices of free pairs."""
    good = {v for v in g.vertices() if g.degree(v) == 2}
    for pair in free:
        e, f = tuple(pair)
        good |= set(e) & set(f)
    return frozenset(good)


# --- verifiers ---


def _require_total_vertices(g: PlaneGraph, c: Mapping[int, int]):
    missing = [v for v in g.vertices() if v not in c]
    if missing:
        raise PartialColoring(f"Vertices without a color: {missing}", {"missing": missing})


def _require_total_edges(g: PlaneGraph, c: Mapping[Edge, int]):
    missing = [e for e in g.edges if e not in c]
    if missing:
        raise PartialColoring(
            f"Edges without a color: {missing}", {"missing": [list(e) for e in missing]}
        )


def _unique_max(items: Iterable, color_of: Mapping, face: int, kind: str) -> List[Violation]:
    items = sorted(items)
    if not items:
        return []
    top = max(color_of[x] for x in items)
    holders = tuple(x for x in items if color_of[x] == top)
    if len(holders) == 1:
        return []
    return [Violation(kind, holders, face, f"maximum color {top} appears {len(holders)} times")]


def _improper_edges(g: PlaneGraph, c: Mapping[int, int]) -> List[Violation]:
    return [
        Violation("improper_edge", (u, v), reason=f"both ends colored {c[u]}")
        for u, v in g.edges
        if c[u] == c[v]
    ]


def check_fum_vertex(g: PlaneGraph, c: Mapping[int, int]) -> Verdict:
    """Proper, and every face has a unique vertex of its maximum color."""
    _require_total_vertices(g, c)
    violations = _improper_edges(g, c)
    for index, vertices, _, _ in face_regions(g):
        violations += _unique_max(vertices, c, index, "vertex_max_not_unique")
    return Verdict(tuple(violations))


def check_f_facial_edge_coloring(
    g: PlaneGraph, c: Mapping[Edge, int], free: FreePairSet = frozenset()
) -> Verdict:
    c = normalize_edge_coloring(c)
    _require_total_edges(g, c)
    violations = []
    for pair in sorted(facial_adjacent_edge_pairs(g) - set(free), key=sorted):
        e, f = sorted(pair)
        if c[e] == c[f]:
            violations.append(Violation("facial_conflict", (e, f), reason=f"both colored {c[e]}"))
    return Verdict(tuple(violations))


def check_fum_edge(
    g: PlaneGraph,
    c: Mapping[Edge, int],
    free: FreePairSet = frozenset(),
    exclude_outer: bool = False,
    outer_cap: Optional[int] = None,
) -> Verdict:
    """FUM-edge-coloring test; with the defaults this is the plain test over all faces."""
    c = normalize_edge_coloring(c)
    violations = list(check_f_facial_edge_coloring(g, c, free).violations)
    for index, _, edges, is_outer in face_regions(g):
        if is_outer and exclude_outer:
            continue
        violations += _unique_max(edges, c, index, "edge_max_not_unique")
    if outer_cap is not None:
        for e in sorted(g.outer_edges):
            if c[e] > outer_cap:
                violations.append(
                    Violation("outer_cap", (e,), reason=f"outer edge colored {c[e]} > {outer_cap}")
                )
    return Verdict(tuple(violations))


def check_lemma6_conditions(g: PlaneGraph, path: PrecoloredPath, c: Mapping[int, int]) -> Verdict:
    """Precoloring-extension contract: proper, matches the path, outer vertices in
    {1,2,3}, colors at most 4, every inner face has a unique maximum."""
    path.validate(g)
    _require_total_vertices(g, c)
    violations = _improper_edges(g, c)
    for v, col in zip(path.vertices, path.colors):
        if c[v] != col:
            violations.append(Violation("precolor_mismatch", (v,), reason=f"expected {col}, got {c[v]}"))
    for v in sorted(g.outer_vertices):
        if c[v] not in (1, 2, 3):
            violations.append(Violation("outer_color", (v,), reason=f"outer vertex colored {c[v]}"))
    for v in g.vertices():
        if not 1 <= c[v] <= 4:
            violations.append(Violation("color_range", (v,), reason=f"color {c[v]} outside 1..4"))
    for index, vertices, _, is_outer in face_regions(g):
        if not is_outer:
            violations += _unique_max(vertices, c, index, "vertex_max_not_unique")
    return Verdict(tuple(violations))
