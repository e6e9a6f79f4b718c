"""Exact backtracking solvers: FUM chromatic numbers, witnesses, red/blue/black labelings.

Variables are ordered by descending conflict count then id, colors ascending,
so equal inputs always give equal outputs. No color is pinned for symmetry:
the unique-maximum condition distinguishes colors by their order.
"""

import time
from typing import Dict, FrozenSet, Hashable, List, Mapping, Optional, Sequence, Set

from embedding import Edge, PlaneGraph
from errors import InvalidParameter, SolverTimeout
from fumcheck import EdgeColoring, VertexColoring, face_regions, facial_adjacent_edge_pairs
from utils import format_duration, log

BLACK = "black"
BLUE = "blue"
RED = "red"
RBB_ORDER = (BLACK, BLUE, RED)

RbbLabeling = Dict[int, str]

_TICK_INTERVAL = 2048


class _Deadline:
    def __init__(self, timeout: Optional[float]):
        self.started = time.monotonic()
        self.expires = self.started + timeout if timeout else None
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.expires is not None and self.nodes % _TICK_INTERVAL == 0:
            if time.monotonic() > self.expires:
                raise SolverTimeout(
                    f"Search exceeded its budget after {self.nodes} nodes",
                    {"nodes": self.nodes},
                )

    @property
    def elapsed(self) -> str:
        return format_duration(time.monotonic() - self.started)


class _UniqueMaxSearch:
    """Proper coloring of a conflict graph with a unique maximum on every region.

    Serves both the vertex problem (conflicts = graph edges, regions = face vertex
    sets) and the edge problem (conflicts = facial adjacency, regions = face edge sets).
    """

    def __init__(
        self,
        conflicts: Mapping[Hashable, Set[Hashable]],
        regions: Sequence[FrozenSet],
        k: int,
        deadline: _Deadline,
    ):
        self.conflicts = conflicts
        self.order = sorted(conflicts, key=lambda x: (-len(conflicts[x]), x))
        self.regions = [tuple(sorted(r)) for r in regions if r]
        self.regions_of: Dict[Hashable, List[int]] = {x: [] for x in conflicts}
        for i, r in enumerate(self.regions):
            for x in r:
                self.regions_of[x].append(i)
        self.k = k
        self.deadline = deadline
        self.color: Dict[Hashable, int] = {}

    def run(self) -> Optional[dict]:
        self.color = {}
        return dict(self.color) if self._extend(0) else None

    def _proper(self, x, col: int) -> bool:
        return all(self.color.get(y) != col for y in self.conflicts[x])

    def _regions_ok(self, x) -> bool:
        for r in self.regions_of[x]:
            top = count = 0
            complete = True
            for y in self.regions[r]:
                c = self.color.get(y)
                if c is None:
                    complete = False
                elif c > top:
                    top, count = c, 1
                elif c == top:
                    count += 1
            # a duplicated k can never be beaten
            if count > 1 and (complete or top == self.k):
                return False
        return True

    def _extend(self, i: int) -> bool:
        self.deadline.tick()
        if i == len(self.order):
            return True
        x = self.order[i]
        for col in range(1, self.k + 1):
            if not self._proper(x, col):
                continue
            self.color[x] = col
            if self._regions_ok(x) and self._extend(i + 1):
                return True
            del self.color[x]
        return False


def _vertex_problem(g: PlaneGraph):
    conflicts = {v: set(g.rotation[v]) for v in g.vertices()}
    regions = [vertices for _, vertices, _, _ in face_regions(g)]
    return conflicts, regions


def _edge_problem(g: PlaneGraph):
    conflicts: Dict[Edge, Set[Edge]] = {e: set() for e in g.edges}
    for pair in facial_adjacent_edge_pairs(g):
        e, f = tuple(pair)
        conflicts[e].add(f)
        conflicts[f].add(e)
    regions = [edges for _, _, edges, _ in face_regions(g)]
    return conflicts, regions


def _check_k(k: int, name: str = "k"):
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"{name} must be a positive integer, got {k!r}")


def find_fum_vertex_coloring(
    g: PlaneGraph, k: int, timeout: Optional[float] = None
) -> Optional[VertexColoring]:
    """A FUM vertex coloring with colors 1..k, or None."""
    _check_k(k)
    conflicts, regions = _vertex_problem(g)
    return _UniqueMaxSearch(conflicts, regions, k, _Deadline(timeout)).run()


def find_fum_edge_coloring(
    g: PlaneGraph, k: int, timeout: Optional[float] = None
) -> Optional[EdgeColoring]:
    """A FUM edge coloring with colors 1..k (all faces, no free pairs), or None."""
    _check_k(k)
    conflicts, regions = _edge_problem(g)
    return _UniqueMaxSearch(conflicts, regions, k, _Deadline(timeout)).run()


def _smallest_k(problem, g: PlaneGraph, max_k: int, timeout: Optional[float], label: str) -> Optional[int]:
    _check_k(max_k, "max_k")
    conflicts, regions = problem(g)
    if not conflicts:
        return 0
    deadline = _Deadline(timeout)
    for k in range(1, max_k + 1):
        if _UniqueMaxSearch(conflicts, regions, k, deadline).run() is not None:
            log("DEBUG", f"{label} = {k} ({deadline.nodes} nodes, {deadline.elapsed})")
            return k
    log("DEBUG", f"{label} exceeds {max_k} ({deadline.nodes} nodes, {deadline.elapsed})")
    return None


def chi_fum(g: PlaneGraph, max_k: int = 6, timeout: Optional[float] = None) -> Optional[int]:
    """Smallest k <= max_k admitting a FUM coloring; None when max_k is exceeded.

    The empty graph needs 0 colors. Raises SolverTimeout when the budget runs out.
    """
    return _smallest_k(_vertex_problem, g, max_k, timeout, "chi_fum")


def chi_fum_edge(g: PlaneGraph, max_k: int = 6, timeout: Optional[float] = None) -> Optional[int]:
    """Smallest k <= max_k admitting a FUM edge coloring; None when exceeded. 0 without edges."""
    return _smallest_k(_edge_problem, g, max_k, timeout, "chi_fum_edge")


def verify_bound_thm2(g: PlaneGraph, timeout: Optional[float] = None) -> bool:
    """Every plane graph has a FUM coloring with at most 5 colors."""
    return chi_fum(g, 5, timeout) is not None


def chromatic_number(g: PlaneGraph, timeout: Optional[float] = None) -> int:
    """Plain proper-coloring chromatic number (lower bound for chi_fum)."""
    conflicts = {v: set(g.rotation[v]) for v in g.vertices()}
    if not conflicts:
        return 0
    deadline = _Deadline(timeout)
    k = 1
    while _UniqueMaxSearch(conflicts, [], k, deadline).run() is None:
        k += 1
    return k


# --- red / blue / black ---


def check_rbb(g: PlaneGraph, labels: Mapping[int, str], extra_independence: bool = False) -> bool:
    """At most one red per face; a face without red has exactly one blue."""
    for _, vertices, _, _ in face_regions(g):
        reds = sum(1 for v in vertices if labels[v] == RED)
        blues = sum(1 for v in vertices if labels[v] == BLUE)
        if reds > 1 or (reds == 0 and blues != 1):
            return False
    if extra_independence:
        for u, v in g.edges:
            if labels[u] == labels[v] and labels[u] in (BLUE, RED):
                return False
    return True


class _RbbSearch:
    def __init__(self, g: PlaneGraph, extra_independence: bool, deadline: _Deadline):
        self.g = g
        self.extra = extra_independence
        self.deadline = deadline
        self.order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
        self.regions = [tuple(sorted(vs)) for _, vs, _, _ in face_regions(g) if vs]
        self.regions_of: Dict[int, List[int]] = {v: [] for v in g.vertices()}
        for i, r in enumerate(self.regions):
            for v in r:
                self.regions_of[v].append(i)
        self.label: Dict[int, str] = {}

    def run(self) -> Optional[RbbLabeling]:
        return dict(self.label) if self._extend(0) else None

    def _ok(self, v: int) -> bool:
        lab = self.label[v]
        if self.extra and lab != BLACK:
            if any(self.label.get(w) == lab for w in self.g.rotation[v]):
                return False
        for r in self.regions_of[v]:
            reds = blues = 0
            complete = True
            for w in self.regions[r]:
                x = self.label.get(w)
                if x is None:
                    complete = False
                elif x == RED:
                    reds += 1
                elif x == BLUE:
                    blues += 1
            if reds > 1:
                return False
            if complete and reds == 0 and blues != 1:
                return False
        return True

    def _extend(self, i: int) -> bool:
        self.deadline.tick()
        if i == len(self.order):
            return True
        v = self.order[i]
        for lab in RBB_ORDER:
            self.label[v] = lab
            if self._ok(v) and self._extend(i + 1):
                return True
        del self.label[v]
        return False


def find_rbb(
    g: PlaneGraph, extra_independence: bool = False, timeout: Optional[float] = None
) -> Optional[RbbLabeling]:
    """Black/blue/red labeling: every face has at most one red vertex, and every
    face without a red vertex has exactly one blue vertex. With
    `extra_independence` blue and red vertices must also form independent sets."""
    result = _RbbSearch(g, extra_independence, _Deadline(timeout)).run()
    if result is None and not extra_independence and g.vertex_count:
        log("WARNING", "No black/blue/red labeling found without independence constraints")
    return result
