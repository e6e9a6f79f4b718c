import random
import sys
from pathlib import Path

import networkx as nx
import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from embedding import classify, cycle_graph, outer_choices, path_graph  # noqa: E402
from families import (  # noqa: E402
    cube,
    enumerate_quadrangulations,
    gen_girth_edge_family,
    gen_girth_vertex_family,
    k4,
    octahedron,
    prism,
    wheel,
)
from graph_io import from_networkx, read_graphs  # noqa: E402
from utils import set_debug_mode  # noqa: E402

FIXTURES = ROOT / "tests" / "fixtures"


@pytest.fixture(autouse=True)
def quiet_logs():
    set_debug_mode(False)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def small_corpus():
    """Named plane graphs used across the test modules."""
    graphs = {f"C{n}": cycle_graph(n) for n in range(3, 8)}
    graphs.update({f"P{n}": path_graph(n) for n in range(2, 6)})
    graphs.update({f"W{n}": wheel(n) for n in range(3, 7)})
    graphs.update({f"prism{n}": prism(n) for n in range(3, 6)})
    graphs["K4"] = k4()
    graphs["cube"] = cube()
    graphs["octahedron"] = octahedron()
    graphs.update({f"girth_vertex_{g}": gen_girth_vertex_family(g) for g in (3, 4)})
    graphs.update({f"girth_edge_{g}": gen_girth_edge_family(g) for g in (4, 6)})
    return graphs


def vertex_class_corpus():
    """Corpus members that are subcubic or outerplane."""
    return {
        name: g
        for name, g in small_corpus().items()
        if classify(g).is_subcubic or classify(g).is_outerplane
    }


def two_connected_corpus():
    return {name: g for name, g in small_corpus().items() if classify(g).is_2connected}


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture(scope="session")
def quadrangulations():
    return enumerate_quadrangulations(8)


def random_plane_graphs(seed: int, count: int, sizes=range(4, 11), max_degree=None, extra=(0, 6)):
    """Seeded connected plane graphs: a random tree plus random edges kept while planar."""
    rng = random.Random(seed)
    cap = max_degree or 10**6
    graphs = []
    while len(graphs) < count:
        n = rng.choice(list(sizes))
        nxg = nx.Graph()
        nxg.add_node(0)
        for v in range(1, n):
            open_ends = [u for u in range(v) if nxg.degree(u) < cap]
            nxg.add_edge(v, rng.choice(open_ends))
        for _ in range(rng.randint(*extra)):
            u, v = rng.sample(range(n), 2)
            if nxg.has_edge(u, v) or nxg.degree(u) >= cap or nxg.degree(v) >= cap:
                continue
            nxg.add_edge(u, v)
            if not nx.check_planarity(nxg)[0]:
                nxg.remove_edge(u, v)
        graphs.append(from_networkx(nxg))
    return graphs


def with_every_outer_face(graphs):
    return [h for g in graphs for h in outer_choices(g)]


def sweep_corpus():
    """Random subcubic and sparse plane graphs on 4..10 vertices, every outer face, plus the fixture stream."""
    graphs = random_plane_graphs(11, 25, max_degree=3)
    graphs += random_plane_graphs(12, 25, extra=(0, 3))
    graphs += random_plane_graphs(13, 25, sizes=range(4, 10), extra=(4, 12))
    graphs += read_graphs(str(FIXTURES / "small.pc"))
    return with_every_outer_face(graphs)
