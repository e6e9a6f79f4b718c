"""Constructive 4-colorings: precoloring extension for subcubic and outerplane
graphs, the quadrangulation construction, and F-facial edge coloring with its
2-connected wrapper.

Each recursion works on a freshly built local PlaneGraph. Vertex-side steps
renumber, so every call carries `labels` (local id -> caller id) for tracing.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind

from embedding import (
    Edge,
    PlaneGraph,
    blocks,
    block_edges,
    classify,
    delete_vertices,
    edge_key,
    induced_subgraph,
    is_2connected,
    remove_edge_tracking_free_pairs,
    remove_edges_tracking_free_pairs,
)
from errors import (
    FallbackExhausted,
    InternalExhaustion,
    InvalidParameter,
    MergeConflict,
    NotApplicable,
    PreconditionViolated,
)
from exact import BLUE, RED, find_fum_vertex_coloring, find_rbb
from fumcheck import (
    EdgeColoring,
    FreePairSet,
    PrecoloredPath,
    VertexColoring,
    check_fum_vertex,
    facial_adjacent_edge_pairs,
    good_vertices,
)
from utils import log

SPLIT_COMPONENTS = "SplitComponents"
EXTEND_PATH = "ExtendPath"
CUT_VERTEX = "CutVertex"
CHORD = "Chord"
CYCLE_BASE = "CycleBase"
CLAIM4_REMOVAL = "Claim4Removal"
CONFIG_A = "ConfigA"
CONFIG_B = "ConfigB"
LEAF_CYCLE = "LeafCycle"

SMALL_COLORS = (1, 2, 3)


@dataclass(frozen=True)
class Reduction:
    kind: str
    witnesses: Tuple = ()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "witnesses": [list(w) if isinstance(w, tuple) else w for w in self.witnesses]}


def _smallest_free(used) -> Optional[int]:
    for col in SMALL_COLORS:
        if col not in used:
            return col
    return None


# --- precoloring extension (vertex side) ---


class _PathExtension:
    """Recursive precoloring extension; `solve` returns a coloring in local ids."""

    def __init__(self, trace: Optional[List[Reduction]]):
        self.trace = trace

    def _record(self, kind: str, *witnesses):
        log("DEBUG", f"{kind}: {witnesses}")
        if self.trace is not None:
            self.trace.append(Reduction(kind, tuple(witnesses)))

    def solve(self, g: PlaneGraph, pre: Dict[int, int], labels: Sequence[int]) -> VertexColoring:
        n = g.vertex_count
        if n == 0:
            return {}
        if len(g.components) > 1:
            return self._split_components(g, pre, labels)
        if n == 1:
            return {0: pre.get(0, 1)}
        if len(pre) < 2:
            return self._extend_path(g, pre, labels)
        if len(pre) == n:
            return dict(pre)

        walk = [d[0] for d in g.outer_walk]
        for v in dict.fromkeys(x for x in walk if walk.count(x) > 1):
            parts = _split_classes(g, {v})
            if len(parts) > 1:
                self._record(CUT_VERTEX, labels[v])
                return self._two_sided(g, pre, labels, {v}, parts)

        chord = _find_chord(g, walk)
        if chord is not None:
            u, w = chord
            self._record(CHORD, (labels[u], labels[w]))
            return self._two_sided(g, pre, labels, {u, w}, _split_classes(g, {u, w}))

        if g.edge_count == n and all(g.degree(v) == 2 for v in g.vertices()):
            return self._color_cycle(g, pre, walk, labels)

        return self._remove_inner_pair(g, pre, walk, labels)

    def _split_components(self, g, pre, labels) -> VertexColoring:
        self._record(SPLIT_COMPONENTS, len(g.components))
        out: VertexColoring = {}
        for comp in g.components:
            sub, m = induced_subgraph(g, comp)
            back = {new: old for old, new in m.items()}
            sub_pre = {m[v]: col for v, col in pre.items() if v in m}
            sub_labels = [labels[back[i]] for i in range(sub.vertex_count)]
            for i, col in self.solve(sub, sub_pre, sub_labels).items():
                out[back[i]] = col
        return out

    def _extend_path(self, g, pre, labels) -> VertexColoring:
        pre = dict(pre)
        if not pre:
            start = min(g.outer_vertices)
            pre[start] = 1
            self._record(EXTEND_PATH, labels[start])
        (p, col), = pre.items()
        w = min(x for x in g.rotation[p] if edge_key(p, x) in g.outer_edges)
        pre[w] = _smallest_free({col})
        self._record(EXTEND_PATH, labels[p], labels[w])
        return self.solve(g, pre, labels)

    def _two_sided(self, g, pre, labels, shared: Set[int], parts: List[FrozenSet[int]]) -> VertexColoring:
        anchor = next(v for v in pre if v not in shared)
        inside = next(p for p in parts if anchor in p)
        w_side = inside | shared
        x_side = frozenset(g.vertices()) - inside

        first = self._solve_part(g, w_side, pre, labels)
        second = self._solve_part(g, x_side, {v: first[v] for v in shared}, labels)
        for v in shared:
            if first[v] != second[v]:
                raise MergeConflict(f"Shared vertex {labels[v]} colored {first[v]} and {second[v]}")
        merged = dict(first)
        merged.update(second)
        return merged

    def _solve_part(self, g, keep, pre, labels) -> VertexColoring:
        sub, m = induced_subgraph(g, keep)
        back = {new: old for old, new in m.items()}
        sub_pre = {m[v]: col for v, col in pre.items() if v in m}
        coloring = self.solve(sub, sub_pre, [labels[back[i]] for i in range(sub.vertex_count)])
        return {back[i]: col for i, col in coloring.items()}

    def _color_cycle(self, g, pre, walk, labels) -> VertexColoring:
        # orient the walk as p1, p2, x1, ..., xm
        p1, p2 = pre
        k = walk.index(p1)
        order = walk[k:] + walk[:k]
        if order[1] != p2:
            order = [p1] + list(reversed(order[1:]))
        a, b = pre[p1], pre[p2]
        rest = order[2:]
        colors = dict(pre)
        if a == 3:
            col = 3 - b
            for x in rest:
                colors[x] = col
                col = 3 - col
        elif b == 3:
            col = 3 - a
            for x in reversed(rest):
                colors[x] = col
                col = 3 - col
        else:
            colors[rest[0]] = 3
            col = 3 - a
            for x in reversed(rest[1:]):
                colors[x] = col
                col = 3 - col
        top = next(x for x in order if colors[x] == 3)
        self._record(CYCLE_BASE, labels[top])
        return colors

    def _remove_inner_pair(self, g, pre, walk, labels) -> VertexColoring:
        on_cycle = set(walk)
        candidates = []
        for v in walk:
            if v in pre or g.degree(v) != 3:
                continue
            candidates += [(v, u) for u in g.rotation[v] if u not in on_cycle]
        for v in walk:
            if v in pre or g.degree(v) != 2:
                continue
            for i in g.faces_at(v):
                face = g.faces[i]
                if not face.is_outer:
                    candidates += [(v, u) for u in dict.fromkeys(face.vertex_sequence()) if u not in on_cycle]

        for v, u in candidates:
            sub, m = delete_vertices(g, (u, v))
            mates = set()
            for i in g.faces_at(u):
                mates |= g.faces[i].vertices
            mates -= {u, v}
            if all(m[x] in sub.outer_vertices for x in mates):
                self._record(CLAIM4_REMOVAL, labels[v], labels[u])
                back = {new: old for old, new in m.items()}
                sub_pre = {m[x]: col for x, col in pre.items()}
                coloring = self.solve(sub, sub_pre, [labels[back[i]] for i in range(sub.vertex_count)])
                colors = {back[i]: col for i, col in coloring.items()}
                colors[u] = 4
                colors[v] = _smallest_free({colors[x] for x in g.rotation[v] if x != u})
                return colors

        raise InternalExhaustion(
            "No reduction applies to the precoloring-extension instance",
            {
                "rotation": [list(r) for r in g.rotation],
                "outer_dart": list(g.outer_dart) if g.outer_dart else None,
                "precolored": {str(labels[v]): col for v, col in pre.items()},
            },
        )


def _split_classes(g: PlaneGraph, shared: Set[int]) -> List[FrozenSet[int]]:
    """Vertex classes of G - shared, joined along edges and along inner faces."""
    rest = [v for v in g.vertices() if v not in shared]
    uf = UnionFind(rest)
    for u, v in g.edges:
        if u not in shared and v not in shared:
            uf.union(u, v)
    for face in g.faces:
        if not face.is_outer:
            members = [x for x in face.vertices if x not in shared]
            if members:
                uf.union(*members)
    return sorted((frozenset(s) for s in uf.to_sets()), key=min)


def _find_chord(g: PlaneGraph, walk: List[int]) -> Optional[Edge]:
    position = {v: i for i, v in enumerate(walk)}
    size = len(walk)
    for u in walk:
        for w in sorted(g.rotation[u]):
            if w in position:
                gap = abs(position[u] - position[w])
                if gap not in (1, size - 1):
                    return (u, w)
    return None


def _require_vertex_class(g: PlaneGraph, subcubic: bool = True, outerplane: bool = True):
    g.require_outer()
    cls = classify(g)
    if (subcubic and cls.is_subcubic) or (outerplane and cls.is_outerplane):
        return
    wanted = " or ".join(n for n, on in (("subcubic", subcubic), ("outerplane", outerplane)) if on)
    raise NotApplicable(f"Graph is not {wanted}")


def color_with_precolored_path(
    g: PlaneGraph, path: PrecoloredPath = PrecoloredPath(), trace: Optional[List[Reduction]] = None
) -> VertexColoring:
    """Extend a precolored outer path of at most two vertices to a proper coloring
    with colors 1..4: outer vertices get 1..3 and every inner face has a unique
    maximum."""
    _require_vertex_class(g)
    path.validate(g)
    return _PathExtension(trace).solve(g, path.as_dict(), list(g.vertices()))


def fum_color(g: PlaneGraph, trace: Optional[List[Reduction]] = None) -> VertexColoring:
    """FUM coloring with at most 4 colors of a subcubic plane or outerplane graph."""
    _require_vertex_class(g)
    if g.vertex_count == 0:
        return {}
    v = g.outer_walk[0][0] if g.outer_walk else min(g.outer_vertices)
    sub, m = delete_vertices(g, (v,))
    back = {new: old for old, new in m.items()}
    former = sorted(m[w] for w in g.rotation[v])
    path = PrecoloredPath.of([(former[0], 1)]) if former else PrecoloredPath()
    coloring = _PathExtension(trace).solve(sub, path.as_dict(), [back[i] for i in range(sub.vertex_count)])
    colors = {back[i]: col for i, col in coloring.items()}
    colors[v] = 4
    return colors


def color_subcubic(g: PlaneGraph, trace: Optional[List[Reduction]] = None) -> VertexColoring:
    _require_vertex_class(g, outerplane=False)
    return fum_color(g, trace)


def color_outerplane(g: PlaneGraph, trace: Optional[List[Reduction]] = None) -> VertexColoring:
    _require_vertex_class(g, subcubic=False)
    return fum_color(g, trace)


def color_quadrangulation(
    g: PlaneGraph, force_fallback: bool = False, timeout: Optional[float] = None
) -> VertexColoring:
    """FUM coloring of a plane quadrangulation with at most 4 colors.

    Red vertices get 4, blue vertices 3, black vertices 1 or 2 by bipartition
    class. When no labeling with independent blue and red sets exists (or
    `force_fallback`), the exact solver supplies the coloring.
    """
    g.require_outer()
    cls = classify(g)
    if not (cls.is_quadrangulation and cls.is_bipartite):
        raise NotApplicable("Graph is not a bipartite plane quadrangulation")

    if not force_fallback:
        labels = find_rbb(g, extra_independence=True, timeout=timeout)
        if labels is not None:
            side = nx.bipartite.color(g.to_networkx())
            colors = {
                v: 4 if lab == RED else 3 if lab == BLUE else side[v] + 1
                for v, lab in labels.items()
            }
            if check_fum_vertex(g, colors).ok:
                return colors
            log("WARNING", "Red/blue/black construction failed verification, using exact fallback")
        else:
            log("INFO", "No independent red/blue/black labeling, using exact fallback")

    for k in range(1, 5):
        colors = find_fum_vertex_coloring(g, k, timeout)
        if colors is not None:
            return colors
    raise FallbackExhausted("Quadrangulation has no FUM coloring with 4 colors")


# --- F-facial edge coloring (edge side) ---


def _facial_neighbors(g: PlaneGraph) -> Dict[Edge, Set[Edge]]:
    out: Dict[Edge, Set[Edge]] = {e: set() for e in g.edges}
    for pair in facial_adjacent_edge_pairs(g):
        e, f = tuple(pair)
        out[e].add(f)
        out[f].add(e)
    return out


def _constraining(neighbors, free: FreePairSet, e: Edge) -> Set[Edge]:
    return {f for f in neighbors[e] if frozenset((e, f)) not in free}


def unsatisfied_leaf_blocks(g: PlaneGraph, free: FreePairSet = frozenset()) -> List[FrozenSet[int]]:
    """Leaf-blocks without an outer good (or degree-1) vertex outside their cut vertex."""
    if not g.edges:
        return []
    g.require_outer()
    good = good_vertices(g, free)
    tree = blocks(g)
    bad = []
    for i, block in enumerate(tree.blocks):
        if len(block) < 2 or tree.tree_degree(i) > 1:
            continue
        candidates = block - tree.cut_vertices or block
        if not any(
            x in g.outer_vertices and (x in good or g.degree(x) == 1) for x in candidates
        ):
            bad.append(block)
    return bad


class _EdgeRecursion:
    def __init__(self, trace: Optional[List[Reduction]]):
        self.trace = trace

    def _record(self, kind: str, *witnesses):
        log("DEBUG", f"{kind}: {witnesses}")
        if self.trace is not None:
            self.trace.append(Reduction(kind, tuple(witnesses)))

    def solve(self, g: PlaneGraph, free: FreePairSet) -> EdgeColoring:
        if not g.edges:
            return {}
        neighbors = _facial_neighbors(g)
        return (
            self._config_a(g, free, neighbors)
            or self._config_b(g, free, neighbors)
            or self._leaf_cycle(g, free, neighbors)
            or self._exhausted(g, free)
        )

    def _config_a(self, g, free, neighbors) -> Optional[EdgeColoring]:
        pendant = [u for u in sorted(g.outer_vertices) if g.degree(u) == 1]
        if not pendant:
            return None
        u = pendant[0]
        e = edge_key(u, g.rotation[u][0])
        self._record(CONFIG_A, u, e)
        sub, sub_free = remove_edge_tracking_free_pairs(g, e, free)
        colors = self.solve(sub, sub_free)
        colors[e] = _smallest_free({colors[f] for f in _constraining(neighbors, free, e)})
        return colors

    def _config_b(self, g, free, neighbors) -> Optional[EdgeColoring]:
        fallback = None
        for e in sorted(g.outer_edges):
            sides = {g.dart_face[e], g.dart_face[(e[1], e[0])]}
            inner = [i for i in sides if not g.faces[i].is_outer]
            if len(inner) != 1:
                continue
            face = g.faces[inner[0]]
            options = sorted(f for f in face.edges if f not in g.outer_edges)
            options.sort(key=lambda f: f not in neighbors[e])
            for f in options:
                if len(_constraining(neighbors, free, e) - {f}) > 2:
                    continue
                sub, sub_free = remove_edges_tracking_free_pairs(g, (e, f), free)
                if not unsatisfied_leaf_blocks(sub, sub_free):
                    return self._apply_b(g, free, neighbors, e, f, sub, sub_free)
                if fallback is None:
                    fallback = (e, f, sub, sub_free)
        if fallback is not None:
            return self._apply_b(g, free, neighbors, *fallback)
        return None

    def _apply_b(self, g, free, neighbors, e, f, sub, sub_free) -> EdgeColoring:
        self._record(CONFIG_B, e, f)
        colors = self.solve(sub, sub_free)
        colors[f] = 4
        colors[e] = _smallest_free({colors[x] for x in _constraining(neighbors, free, e) if x != f})
        return colors

    def _leaf_cycle(self, g, free, neighbors) -> Optional[EdgeColoring]:
        tree = blocks(g)
        for i, block in enumerate(tree.blocks):
            if len(block) < 3 or tree.tree_degree(i) > 1:
                continue
            ring = block_edges(g, block)
            cut = block & tree.cut_vertices
            if len(ring) != len(block) or not all(e in g.outer_edges for e in ring):
                continue
            if any(g.degree(x) != 2 for x in block - cut):
                continue
            attach = min(cut) if cut else min(block)
            first = edge_key(attach, next(x for x in g.rotation[attach] if x in block))
            inner = [
                j for j in (g.dart_face[first], g.dart_face[(first[1], first[0])])
                if not g.faces[j].is_outer
            ]
            if not inner or g.faces[inner[0]].length != len(block):
                continue
            self._record(LEAF_CYCLE, attach, tuple(sorted(block)))
            sub, sub_free = remove_edges_tracking_free_pairs(g, ring, free)
            colors = self.solve(sub, sub_free)
            colors.update(_color_ring(_ring_order(g, block, attach), neighbors, free, colors))
            return colors
        return None

    def _exhausted(self, g, free):
        raise InternalExhaustion(
            "No reduction applies to the F-facial edge-coloring instance",
            {
                "rotation": [list(r) for r in g.rotation],
                "outer_dart": list(g.outer_dart) if g.outer_dart else None,
                "free_pairs": sorted(sorted(list(e) for e in p) for p in free),
            },
        )


def _ring_order(g: PlaneGraph, block: FrozenSet[int], attach: int) -> List[Edge]:
    """Edges of a cycle block in cyclic order, starting and ending at `attach`."""
    order = []
    prev, cur = attach, next(x for x in g.rotation[attach] if x in block)
    order.append(edge_key(prev, cur))
    while cur != attach:
        nxt = next(x for x in g.rotation[cur] if x in block and x != prev)
        order.append(edge_key(cur, nxt))
        prev, cur = cur, nxt
    return order


def _color_ring(ring: List[Edge], neighbors, free, colors: EdgeColoring) -> EdgeColoring:
    """Color a leaf cycle: exactly one edge gets 3, the others alternate 1 and 2."""
    ring_set = set(ring)

    def blocked(e):
        return {colors[f] for f in _constraining(neighbors, free, e) if f not in ring_set and f in colors}

    first, last = ring[0], ring[-1]
    out: EdgeColoring = {}
    if 3 not in blocked(first):
        out[first] = 3
        col = _smallest_free(blocked(last) | {3})
        for e in reversed(ring[1:]):
            out[e] = col
            col = 3 - col
    elif 3 not in blocked(last):
        out[last] = 3
        col = _smallest_free(blocked(first) | {3})
        for e in ring[:-1]:
            out[e] = col
            col = 3 - col
    else:
        # both ends see a 3, so each end sees at most one of 1, 2
        out[first] = _smallest_free(blocked(first))
        out[last] = _smallest_free(blocked(last) | {out[first]})
        if out[last] is None:
            raise InternalExhaustion("Leaf cycle ends cannot be colored from {1, 2}")
        middle = len(ring) // 2
        out[ring[middle]] = 3
        col = 3 - out[first]
        for e in ring[1:middle]:
            out[e] = col
            col = 3 - col
        col = 3 - out[last]
        for e in reversed(ring[middle + 1:-1]):
            out[e] = col
            col = 3 - col
    return out


def _validate_free(g: PlaneGraph, free: FreePairSet):
    for pair in free:
        if len(pair) != 2 or not all(g.has_edge(*e) for e in pair):
            raise InvalidParameter(f"Free pair {sorted(pair)} is not a pair of edges of the graph")


def f_facial_edge_color(
    g: PlaneGraph, free: FreePairSet = frozenset(), trace: Optional[List[Reduction]] = None
) -> EdgeColoring:
    """Edge coloring with 1..4: F-facially proper, outer edges at most 3, and every
    inner face has a unique maximal edge. Every leaf-block needs a good outer vertex."""
    _validate_free(g, free)
    bad = unsatisfied_leaf_blocks(g, free)
    if bad:
        raise PreconditionViolated(
            "Leaf-block without a good vertex on the outer face",
            {"leaf_blocks": [sorted(b) for b in bad]},
        )
    return _EdgeRecursion(trace).solve(g, frozenset(free))


def fum_edge_color_2connected(g: PlaneGraph, trace: Optional[List[Reduction]] = None) -> EdgeColoring:
    """FUM edge coloring with at most 4 colors of a 2-connected plane graph."""
    g.require_outer()
    if not is_2connected(g):
        raise NotApplicable("Graph is not 2-connected")
    e = min(g.outer_edges)
    sub, free = remove_edge_tracking_free_pairs(g, e, frozenset())
    colors = _EdgeRecursion(trace).solve(sub, free)
    colors[e] = 4
    return colors
