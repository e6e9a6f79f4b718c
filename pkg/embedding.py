"""Plane graphs as rotation systems: face tracing, blocks and embedding-preserving edits.

Orientation convention, fixed everywhere: the face walk continues after the dart
(u, v) with the dart (v, w), where w follows u in the rotation of v.

Disconnected graphs are embedded side by side in the outer region; the outer
faces of all components together form the one global outer face.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.utils import UnionFind

from errors import (
    AsymmetricAdjacency,
    DuplicateNeighbor,
    EulerViolation,
    InvalidOuterDart,
    InvalidParameter,
    MissingOuterDart,
    NotAnEdge,
    SelfLoop,
)

Dart = Tuple[int, int]
Edge = Tuple[int, int]
FreePair = FrozenSet[Edge]
RotationInput = Union[Mapping[int, Sequence[int]], Sequence[Sequence[int]]]


def edge_key(u: int, v: int) -> Edge:
    """Normalized edge (smaller id first)."""
    return (u, v) if u < v else (v, u)


def free_pair(e: Edge, f: Edge) -> FreePair:
    return frozenset((edge_key(*e), edge_key(*f)))


@dataclass(frozen=True)
class Face:
    """Closed facial walk. Isolated vertices get an empty walk and an anchor."""

    walk: Tuple[Dart, ...]
    is_outer: bool = False
    anchor: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.walk)

    @cached_property
    def vertices(self) -> FrozenSet[int]:
        if not self.walk:
            return frozenset() if self.anchor is None else frozenset((self.anchor,))
        return frozenset(d[0] for d in self.walk)

    @cached_property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(edge_key(*d) for d in self.walk)

    def vertex_sequence(self) -> List[int]:
        return [d[0] for d in self.walk]

    def is_cycle(self) -> bool:
        """True if the walk visits no vertex twice (and has length >= 3)."""
        return len(self.walk) >= 3 and len(self.vertices) == len(self.walk)


@dataclass(frozen=True)
class PlaneGraph:
    """Simple plane graph as a rotation system. Build through build_plane_graph().

    `component_outer` holds outer darts of components that do not contain
    `outer_dart`; components without any designated dart use the face of the
    dart (m, rotation[m][0]) with m the smallest vertex of the component.
    """

    vertex_count: int
    rotation: Tuple[Tuple[int, ...], ...]
    outer_dart: Optional[Dart] = None
    component_outer: Tuple[Dart, ...] = ()

    # --- adjacency ---

    @cached_property
    def _position(self) -> List[Dict[int, int]]:
        return [{w: i for i, w in enumerate(rot)} for rot in self.rotation]

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(
            sorted((u, v) for u, rot in enumerate(self.rotation) for v in rot if u < v)
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(r) for r in self.rotation), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.vertex_count and v in self._position[u]

    def succ(self, v: int, u: int) -> int:
        """Neighbor following u in the rotation of v."""
        rot = self.rotation[v]
        return rot[(self._position[v][u] + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        """Neighbor preceding u in the rotation of v."""
        rot = self.rotation[v]
        return rot[(self._position[v][u] - 1) % len(rot)]

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        return (v, self.succ(v, u))

    def darts(self) -> Iterable[Dart]:
        for u, rot in enumerate(self.rotation):
            for v in rot:
                yield (u, v)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    # --- components ---

    @cached_property
    def components(self) -> Tuple[FrozenSet[int], ...]:
        comps = [frozenset(c) for c in nx.connected_components(self.to_networkx())]
        return tuple(sorted(comps, key=min))

    @cached_property
    def component_index(self) -> Dict[int, int]:
        return {v: i for i, comp in enumerate(self.components) for v in comp}

    # --- faces ---

    @cached_property
    def _walks(self) -> List[Tuple[Dart, ...]]:
        """Raw face walks (and isolated-vertex placeholders as empty tuples) in a fixed order."""
        seen = set()
        walks: List[Tuple[Dart, ...]] = []
        for u, rot in enumerate(self.rotation):
            if not rot:
                walks.append(())
                continue
            for v in rot:
                if (u, v) in seen:
                    continue
                walk = []
                d = (u, v)
                while d not in seen:
                    seen.add(d)
                    walk.append(d)
                    d = self.next_dart(d)
                walks.append(tuple(walk))
        return walks

    @cached_property
    def _anchors(self) -> Dict[int, int]:
        """Walk index -> vertex, for isolated-vertex placeholders."""
        isolated = [v for v, rot in enumerate(self.rotation) if not rot]
        empty = [i for i, w in enumerate(self._walks) if not w]
        return dict(zip(empty, isolated))

    @property
    def has_outer(self) -> bool:
        """An outer face is defined (designated dart, or nothing but isolated vertices)."""
        return self.outer_dart is not None or not self.edges

    def require_outer(self):
        if not self.has_outer:
            raise MissingOuterDart("Operation needs an outer face but the graph has no outer_dart")

    @cached_property
    def _outer_walk_indices(self) -> FrozenSet[int]:
        walks = self._walks
        if not self.has_outer:
            return frozenset()
        dart_walk = self.dart_face
        chosen = set()
        done = set()
        for d in ((self.outer_dart,) if self.outer_dart else ()) + self.component_outer:
            comp = self.component_index[d[0]]
            if comp not in done:
                done.add(comp)
                chosen.add(dart_walk[d])
        for comp_id, comp in enumerate(self.components):
            m = min(comp)
            if not self.rotation[m]:
                continue
            if comp_id not in done:
                chosen.add(dart_walk[(m, self.rotation[m][0])])
        chosen.update(i for i, w in enumerate(walks) if not w)
        return frozenset(chosen)

    @cached_property
    def dart_face(self) -> Dict[Dart, int]:
        """Face index of every dart."""
        return {d: i for i, walk in enumerate(self._walks) for d in walk}

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        walks = self._walks
        outer = self._outer_walk_indices
        return tuple(
            Face(walk=w, is_outer=i in outer, anchor=self._anchors.get(i))
            for i, w in enumerate(walks)
        )

    @cached_property
    def outer_face_indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self._outer_walk_indices))

    @cached_property
    def outer_vertices(self) -> FrozenSet[int]:
        out = set()
        for i in self.outer_face_indices:
            out |= self.faces[i].vertices
        return frozenset(out)

    @cached_property
    def outer_edges(self) -> FrozenSet[Edge]:
        out = set()
        for i in self.outer_face_indices:
            out |= self.faces[i].edges
        return frozenset(out)

    @property
    def outer_walk(self) -> Tuple[Dart, ...]:
        """Walk of the primary outer face, starting at outer_dart."""
        if self.outer_dart is None:
            return ()
        walk = self.faces[self.dart_face[self.outer_dart]].walk
        k = walk.index(self.outer_dart)
        return walk[k:] + walk[:k]

    def outer_walk_of(self, v: int) -> Tuple[Dart, ...]:
        """Outer walk of the component containing v (empty for isolated vertices)."""
        comp = self.component_index[v]
        for i in self.outer_face_indices:
            walk = self.faces[i].walk
            if walk and self.component_index[walk[0][0]] == comp:
                return walk
        return ()

    def faces_at(self, v: int) -> FrozenSet[int]:
        """Indices of faces incident with v."""
        if not self.rotation[v]:
            return frozenset(i for i, f in enumerate(self.faces) if f.anchor == v)
        return frozenset(self.dart_face[(v, w)] for w in self.rotation[v])


# --- construction and validation ---


def _normalize_rotation(vertex_count: int, rotation: RotationInput) -> Tuple[Tuple[int, ...], ...]:
    if isinstance(rotation, Mapping):
        for v in rotation:
            if not 0 <= v < vertex_count:
                raise InvalidParameter(f"Rotation given for unknown vertex {v}")
        rows = [tuple(rotation.get(v, ())) for v in range(vertex_count)]
    else:
        rows = [tuple(r) for r in rotation]
        if len(rows) != vertex_count:
            raise InvalidParameter(
                f"Expected {vertex_count} rotation lists, got {len(rows)}"
            )
    for v, rot in enumerate(rows):
        for w in rot:
            if not isinstance(w, int) or not 0 <= w < vertex_count:
                raise InvalidParameter(f"Vertex {v} lists invalid neighbor {w!r}")
    return tuple(rows)


def _validate(g: PlaneGraph):
    for v, rot in enumerate(g.rotation):
        if v in rot:
            raise SelfLoop(f"Self-loop at vertex {v}")
        if len(set(rot)) != len(rot):
            raise DuplicateNeighbor(f"Vertex {v} lists a neighbor twice")
    for v, rot in enumerate(g.rotation):
        for w in rot:
            if v not in g._position[w]:
                raise AsymmetricAdjacency(f"{w} appears around {v} but not vice versa")
    for d in ((g.outer_dart,) if g.outer_dart is not None else ()) + tuple(g.component_outer):
        if len(d) != 2 or not g.has_edge(d[0], d[1]):
            raise InvalidOuterDart(f"Outer dart {d} is not a dart of the graph")

    walks_per_comp = [0] * len(g.components)
    for walk in g._walks:
        v = walk[0][0] if walk else None
        if v is None:
            continue
        walks_per_comp[g.component_index[v]] += 1
    edges_per_comp = [0] * len(g.components)
    for u, _ in g.edges:
        edges_per_comp[g.component_index[u]] += 1
    for i, comp in enumerate(g.components):
        faces = walks_per_comp[i] if edges_per_comp[i] else 1
        euler = len(comp) - edges_per_comp[i] + faces
        if euler != 2:
            raise EulerViolation(
                f"Component with {len(comp)} vertices, {edges_per_comp[i]} edges, "
                f"{faces} faces has V-E+F={euler}"
            )


def build_plane_graph(
    vertex_count: int,
    rotation: RotationInput,
    outer_dart: Optional[Dart] = None,
    component_outer: Sequence[Dart] = (),
) -> PlaneGraph:
    """Validated PlaneGraph; every type invariant is checked eagerly."""
    if vertex_count < 0:
        raise InvalidParameter("vertex_count must be nonnegative")
    rows = _normalize_rotation(vertex_count, rotation)
    g = PlaneGraph(
        vertex_count=vertex_count,
        rotation=rows,
        outer_dart=tuple(outer_dart) if outer_dart is not None else None,
        component_outer=tuple(tuple(d) for d in component_outer),
    )
    _validate(g)
    return g


def trace_faces(g: PlaneGraph) -> List[Face]:
    return list(g.faces)


# --- blocks ---


@dataclass(frozen=True)
class BlockTree:
    """Block-cut decomposition. `block_adjacency` holds (block index, cut vertex)
    incidences, i.e. the edges of the block-cut tree."""

    blocks: Tuple[FrozenSet[int], ...]
    cut_vertices: FrozenSet[int]
    block_adjacency: Tuple[Tuple[int, int], ...]

    def tree_degree(self, index: int) -> int:
        return sum(1 for b, _ in self.block_adjacency if b == index)

    def block_of_cut(self, v: int) -> List[int]:
        return [b for b, c in self.block_adjacency if c == v]


def blocks(g: PlaneGraph) -> BlockTree:
    nxg = g.to_networkx()
    found = [frozenset(b) for b in nx.biconnected_components(nxg)]
    found += [frozenset((v,)) for v in g.vertices() if not g.rotation[v]]
    found.sort(key=lambda b: (min(b), sorted(b)))
    cuts = frozenset(nx.articulation_points(nxg))
    adjacency = tuple(
        (i, v) for i, b in enumerate(found) for v in sorted(b & cuts)
    )
    return BlockTree(blocks=tuple(found), cut_vertices=cuts, block_adjacency=adjacency)


def leaf_blocks(tree: BlockTree) -> List[FrozenSet[int]]:
    return [b for i, b in enumerate(tree.blocks) if tree.tree_degree(i) <= 1]


def block_edges(g: PlaneGraph, block: FrozenSet[int]) -> List[Edge]:
    return [e for e in g.edges if e[0] in block and e[1] in block]


# --- edits ---


def _restrict(
    g: PlaneGraph,
    removed_vertices: FrozenSet[int] = frozenset(),
    removed_edges: FrozenSet[Edge] = frozenset(),
    renumber: bool = True,
) -> Tuple[PlaneGraph, Dict[int, int]]:
    """Subembedding without the given vertices/edges.

    Regions are tracked as unions of old faces: deleting a vertex merges the faces
    around it, deleting an edge merges its two sides. Components touching the old
    outer region take their face there as outer face; a component left inside an
    inner face of another one takes the face it shares with it.
    """
    if renumber:
        keep = [v for v in g.vertices() if v not in removed_vertices]
    else:
        keep = list(g.vertices())
    old_to_new = {v: i for i, v in enumerate(keep)}

    def alive(u: int, v: int) -> bool:
        return (
            u not in removed_vertices
            and v not in removed_vertices
            and edge_key(u, v) not in removed_edges
        )

    rows = [
        tuple(old_to_new[w] for w in g.rotation[v] if alive(v, w)) if v not in removed_vertices else ()
        for v in keep
    ]

    bare = build_plane_graph(len(rows), rows)
    if not (g.has_outer and g.edges and bare.edges):
        return bare, old_to_new

    uf = UnionFind(range(len(g.faces)))
    outer = g.outer_face_indices
    uf.union(*outer)
    for x in removed_vertices:
        if g.rotation[x]:
            uf.union(*g.faces_at(x))
    for a, b in removed_edges:
        uf.union(g.dart_face[(a, b)], g.dart_face[(b, a)])

    # Every new face lies inside one merged region of old faces.
    walks = bare._walks
    walk_region: Dict[int, int] = {}
    by_region: Dict[int, List[int]] = {}
    for i, walk in enumerate(walks):
        if walk:
            a, b = walk[0]
            region = uf[g.dart_face[(keep[a], keep[b])]]
            walk_region[i] = region
            by_region.setdefault(region, []).append(i)

    # A region holding the outer face of some component is, for every other
    # component touching it, that component's outer face as well.
    comp_outer: Dict[int, int] = {}
    queue = [uf[outer[0]]]
    visited = set(queue)
    while queue:
        region = queue.pop(0)
        for i in by_region.get(region, []):
            comp = bare.component_index[walks[i][0][0]]
            if comp in comp_outer:
                continue
            comp_outer[comp] = i
            for j, other in walk_region.items():
                if other not in visited and bare.component_index[walks[j][0][0]] == comp:
                    visited.add(other)
                    queue.append(other)

    chosen: Dict[int, Dart] = {}
    for a, b in g.outer_walk:
        if alive(a, b):
            d = (old_to_new[a], old_to_new[b])
            comp = bare.component_index[d[0]]
            if comp not in chosen and bare.dart_face[d] == comp_outer.get(comp):
                chosen[comp] = d
    first = next(iter(chosen), None)
    for comp, i in sorted(comp_outer.items()):
        chosen.setdefault(comp, walks[i][0])
    if first is None:
        first = min(chosen)
    extra = [d for comp, d in sorted(chosen.items()) if comp != first]
    return build_plane_graph(len(rows), rows, chosen[first], extra), old_to_new


def delete_vertices(g: PlaneGraph, vertices: Iterable[int]) -> Tuple[PlaneGraph, Dict[int, int]]:
    """Induced subembedding without `vertices`. Returns the graph and the old->new id map."""
    gone = frozenset(vertices)
    for v in gone:
        if not 0 <= v < g.vertex_count:
            raise InvalidParameter(f"Vertex {v} is not in the graph")
    return _restrict(g, removed_vertices=gone)


def induced_subgraph(g: PlaneGraph, vertices: Iterable[int]) -> Tuple[PlaneGraph, Dict[int, int]]:
    keep = frozenset(vertices)
    return delete_vertices(g, [v for v in g.vertices() if v not in keep])


def remove_edge_tracking_free_pairs(
    g: PlaneGraph, e: Edge, free: FrozenSet[FreePair] = frozenset()
) -> Tuple[PlaneGraph, FrozenSet[FreePair]]:
    """G - e. At every endpoint of degree >= 4 the two rotation neighbours of e
    become facially adjacent in G - e without being so in G; they are recorded
    as a free pair. Pairs containing e are dropped."""
    u, v = e
    if not g.has_edge(u, v):
        raise NotAnEdge(f"{e} is not an edge")
    removed = edge_key(u, v)
    added = set()
    for x, y in ((u, v), (v, u)):
        if g.degree(x) >= 4:
            added.add(free_pair((x, g.pred(x, y)), (x, g.succ(x, y))))
    result, _ = _restrict(g, removed_edges=frozenset((removed,)), renumber=False)
    kept = frozenset(p for p in free if removed not in p)
    return result, kept | frozenset(added)


def remove_edges_tracking_free_pairs(
    g: PlaneGraph, edges: Iterable[Edge], free: FrozenSet[FreePair] = frozenset()
) -> Tuple[PlaneGraph, FrozenSet[FreePair]]:
    for e in edges:
        g, free = remove_edge_tracking_free_pairs(g, e, free)
    return g, free


def subdivide_all(g: PlaneGraph) -> PlaneGraph:
    """Replace every edge uv by a path u-w-v through a fresh vertex w."""
    n = g.vertex_count
    mid = {e: n + i for i, e in enumerate(g.edges)}
    rows: List[Tuple[int, ...]] = [
        tuple(mid[edge_key(u, w)] for w in rot) for u, rot in enumerate(g.rotation)
    ]
    rows += [e for e in g.edges]

    def sub(d: Dart) -> Dart:
        return (d[0], mid[edge_key(*d)])

    return build_plane_graph(
        n + len(g.edges),
        rows,
        sub(g.outer_dart) if g.outer_dart else None,
        [sub(d) for d in g.component_outer],
    )


def mirror(g: PlaneGraph) -> PlaneGraph:
    """Reflected embedding; face walks reverse, so outer darts flip."""
    return build_plane_graph(
        g.vertex_count,
        [tuple(reversed(r)) for r in g.rotation],
        (g.outer_dart[1], g.outer_dart[0]) if g.outer_dart else None,
        [(b, a) for a, b in g.component_outer],
    )


def relabel(g: PlaneGraph, perm: Sequence[int]) -> PlaneGraph:
    """Rename vertex v to perm[v]."""
    rows: List[Tuple[int, ...]] = [()] * g.vertex_count
    for v, rot in enumerate(g.rotation):
        rows[perm[v]] = tuple(perm[w] for w in rot)

    def m(d: Dart) -> Dart:
        return (perm[d[0]], perm[d[1]])

    return build_plane_graph(
        g.vertex_count,
        rows,
        m(g.outer_dart) if g.outer_dart else None,
        [m(d) for d in g.component_outer],
    )


def rotate_rotations(g: PlaneGraph, shift: int = 1) -> PlaneGraph:
    """Same embedding with every cyclic rotation list started elsewhere."""
    rows = []
    for rot in g.rotation:
        k = shift % len(rot) if rot else 0
        rows.append(rot[k:] + rot[:k])
    return build_plane_graph(g.vertex_count, rows, g.outer_dart, g.component_outer)


def outer_choices(g: PlaneGraph) -> List[PlaneGraph]:
    """The same rotation system once per face, with that face as the outer face."""
    return [
        build_plane_graph(g.vertex_count, g.rotation, f.walk[0], g.component_outer)
        for f in g.faces
        if f.walk
    ]


def _outer_angle(g: PlaneGraph, v: int) -> Optional[int]:
    """Neighbour x of v such that the outer walk passes x -> v -> succ(v, x)."""
    for a, b in g.outer_walk_of(v):
        if b == v:
            return a
    return None


def join_at_vertex(g1: PlaneGraph, v1: int, g2: PlaneGraph, v2: int) -> PlaneGraph:
    """Glue g2 into the outer region of g1 by identifying outer vertices v1 and v2.

    g2's vertices other than v2 are renumbered to follow g1's.
    """
    for g, v in ((g1, v1), (g2, v2)):
        g.require_outer()
        if v not in g.outer_vertices:
            raise InvalidParameter(f"Vertex {v} is not on the outer face")
    n1 = g1.vertex_count
    others = [w for w in g2.vertices() if w != v2]
    m = {w: n1 + i for i, w in enumerate(others)}
    m[v2] = v1

    if g2.rotation[v2]:
        x2 = _outer_angle(g2, v2)
        y2 = g2.succ(v2, x2)
        rot2 = g2.rotation[v2]
        k = rot2.index(y2)
        block = tuple(m[w] for w in rot2[k:] + rot2[:k])
    else:
        block = ()

    rows = [list(r) for r in g1.rotation]
    if rows[v1] and block:
        x1 = _outer_angle(g1, v1)
        k = rows[v1].index(x1)
        rows[v1] = rows[v1][: k + 1] + list(block) + rows[v1][k + 1 :]
    elif block:
        rows[v1] = list(block)
    rows += [[m[u] for u in g2.rotation[w]] for w in others]

    def mp(d: Dart) -> Dart:
        return (m[d[0]], m[d[1]])

    g2_darts = ([g2.outer_dart] if g2.outer_dart else []) + list(g2.component_outer)
    primary = g1.outer_dart or (mp(g2_darts[0]) if g2_darts else None)
    extra = list(g1.component_outer) + [mp(d) for d in g2_darts]
    if primary in extra:
        extra.remove(primary)
    return build_plane_graph(len(rows), rows, primary, extra)


def disjoint_union(g1: PlaneGraph, g2: PlaneGraph) -> PlaneGraph:
    """Side-by-side placement of two plane graphs."""
    n1 = g1.vertex_count
    rows = list(g1.rotation) + [tuple(w + n1 for w in r) for r in g2.rotation]
    g2_darts = [(a + n1, b + n1) for a, b in ([g2.outer_dart] if g2.outer_dart else []) + list(g2.component_outer)]
    primary = g1.outer_dart or (g2_darts[0] if g2_darts else None)
    extra = list(g1.component_outer) + [d for d in g2_darts if d != primary]
    return build_plane_graph(len(rows), rows, primary, extra)


# --- standard small graphs ---


def empty_graph(n: int = 0) -> PlaneGraph:
    return build_plane_graph(n, [()] * n)


def cycle_graph(n: int) -> PlaneGraph:
    if n < 3:
        raise InvalidParameter("A cycle needs at least 3 vertices")
    rows = [((i + 1) % n, (i - 1) % n) for i in range(n)]
    return build_plane_graph(n, rows, (0, 1))


def path_graph(n: int) -> PlaneGraph:
    rows = [tuple(w for w in (i - 1, i + 1) if 0 <= w < n) for i in range(n)]
    return build_plane_graph(n, rows, (0, 1) if n >= 2 else None)


# --- classification ---


@dataclass(frozen=True)
class GraphClass:
    is_subcubic: bool
    is_outerplane: bool
    is_quadrangulation: bool
    is_bipartite: bool
    is_2connected: bool
    girth: Optional[int]  # None for forests (infinite girth)

    def to_dict(self) -> dict:
        return {
            "is_subcubic": self.is_subcubic,
            "is_outerplane": self.is_outerplane,
            "is_quadrangulation": self.is_quadrangulation,
            "is_bipartite": self.is_bipartite,
            "is_2connected": self.is_2connected,
            "girth": self.girth,
        }


def girth(g: PlaneGraph) -> Optional[int]:
    """Length of a shortest cycle by BFS from every vertex; None for forests."""
    best: Optional[int] = None
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for x in queue:
            for y in g.rotation[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_2connected(g: PlaneGraph) -> bool:
    return g.vertex_count >= 3 and nx.is_biconnected(g.to_networkx())


def classify(g: PlaneGraph) -> GraphClass:
    g.require_outer()
    nxg = g.to_networkx()
    return GraphClass(
        is_subcubic=g.max_degree <= 3,
        is_outerplane=g.outer_vertices == frozenset(g.vertices()),
        is_quadrangulation=bool(g.faces) and all(f.length == 4 for f in g.faces),
        is_bipartite=nx.is_bipartite(nxg),
        is_2connected=is_2connected(g),
        girth=girth(g),
    )


# --- canonical form ---


def _bfs_code(g: PlaneGraph, start: Dart, reverse: bool) -> Tuple[int, ...]:
    number = {start[0]: 0}
    order = [start[0]]
    entry = {start[0]: start[1]}
    code: List[int] = []
    for v in order:
        rot = g.rotation[v][::-1] if reverse else g.rotation[v]
        k = rot.index(entry[v])
        for w in rot[k:] + rot[:k]:
            if w not in number:
                number[w] = len(order)
                order.append(w)
                entry[w] = v
            code.append(number[w])
        code.append(-1)
    return tuple(code)


def canonical_code(g: PlaneGraph) -> Tuple:
    """Code invariant under relabelling and reflection of the embedding."""
    parts = []
    for comp in g.components:
        darts = [(u, v) for u in comp for v in g.rotation[u]]
        if not darts:
            parts.append(())
            continue
        parts.append(min(_bfs_code(g, d, rev) for d in darts for rev in (False, True)))
    return tuple(sorted(parts))
