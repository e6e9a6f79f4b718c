import random
from types import SimpleNamespace

import pytest

import exact
from embedding import build_plane_graph, cycle_graph, empty_graph, path_graph, relabel, rotate_rotations
from errors import InvalidParameter, SolverTimeout
from exact import (
    BLACK,
    BLUE,
    RED,
    check_rbb,
    chi_fum,
    chi_fum_edge,
    chromatic_number,
    find_fum_edge_coloring,
    find_fum_vertex_coloring,
    find_rbb,
    verify_bound_thm2,
)
from families import cube, domino, gen_girth_vertex_family, k4
from fumcheck import check_fum_edge, check_fum_vertex


def star(leaves: int):
    rows = [tuple(range(1, leaves + 1))] + [(0,)] * leaves
    return build_plane_graph(leaves + 1, rows, (0, 1))


class TestChiFum:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycles_need_three(self, n):
        assert chi_fum(cycle_graph(n)) == 3

    def test_k4(self):
        assert chi_fum(k4()) == 4

    def test_paths(self):
        assert chi_fum(path_graph(2)) == 2
        assert chi_fum(path_graph(3)) == 2
        assert chi_fum(path_graph(4)) == 3

    def test_star_needs_two(self):
        assert chi_fum(star(3)) == 2

    def test_trivial_graphs(self):
        assert chi_fum(empty_graph()) == 0
        assert chi_fum(empty_graph(1)) == 1

    def test_exceeded_is_none(self):
        assert chi_fum(k4(), max_k=3) is None

    def test_max_k_must_be_positive(self):
        with pytest.raises(InvalidParameter):
            chi_fum(k4(), max_k=0)

    def test_bound_holds(self):
        assert verify_bound_thm2(k4())
        assert verify_bound_thm2(cube())


class TestChiFumEdge:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycles_need_three(self, n):
        assert chi_fum_edge(cycle_graph(n)) == 3

    def test_domino_needs_four(self):
        assert chi_fum_edge(domino()) == 4

    def test_path_and_star(self):
        assert chi_fum_edge(path_graph(3)) == 2
        assert chi_fum_edge(star(3)) == 3

    def test_no_edges(self):
        assert chi_fum_edge(empty_graph(3)) == 0


class TestWitnesses:
    def test_vertex_witness_verifies(self):
        c = find_fum_vertex_coloring(k4(), 4)
        assert c is not None and check_fum_vertex(k4(), c).ok
        assert find_fum_vertex_coloring(k4(), 3) is None

    def test_edge_witness_verifies(self):
        g = domino()
        c = find_fum_edge_coloring(g, 4)
        assert c is not None and check_fum_edge(g, c).ok
        assert find_fum_edge_coloring(g, 3) is None

    def test_deterministic(self):
        g = gen_girth_vertex_family(4)
        assert find_fum_vertex_coloring(g, 4) == find_fum_vertex_coloring(g, 4)

    def test_timeout(self, monkeypatch):
        ticks = iter(range(0, 10**6, 100))
        monkeypatch.setattr(exact, "time", SimpleNamespace(monotonic=lambda: next(ticks)))
        monkeypatch.setattr(exact, "_TICK_INTERVAL", 1)
        with pytest.raises(SolverTimeout):
            chi_fum(cube(), timeout=1.0)


class TestChromaticNumber:
    def test_values(self):
        assert chromatic_number(k4()) == 4
        assert chromatic_number(cycle_graph(5)) == 3
        assert chromatic_number(cycle_graph(4)) == 2
        assert chromatic_number(empty_graph()) == 0

    def test_lower_bound_for_chi_fum(self):
        for g in (k4(), cube(), cycle_graph(5)):
            assert chromatic_number(g) <= chi_fum(g)


class TestRedBlueBlack:
    def test_check_rbb(self):
        g = cycle_graph(4)
        assert not check_rbb(g, {v: BLACK for v in range(4)})
        assert check_rbb(g, {0: BLUE, 1: BLACK, 2: BLACK, 3: BLACK})
        assert not check_rbb(g, {0: RED, 1: BLACK, 2: RED, 3: BLACK})

    def test_extra_independence(self):
        g = cycle_graph(4)
        labels = {0: BLUE, 1: BLUE, 2: BLACK, 3: BLACK}
        assert not check_rbb(g, labels)
        labels = {0: RED, 1: BLACK, 2: BLACK, 3: BLACK}
        assert check_rbb(g, labels, extra_independence=True)

    def test_cube_labeling(self):
        g = cube()
        labels = find_rbb(g)
        assert labels is not None
        assert check_rbb(g, labels)


@pytest.mark.parametrize(
    "g", [k4(), cube(), gen_girth_vertex_family(3), path_graph(4)], ids=["K4", "cube", "girth_vertex_3", "P4"]
)
def test_chi_ignores_labels_and_rotation_starts(g):
    perm = list(range(g.vertex_count))
    random.Random(g.vertex_count).shuffle(perm)
    expected = (chi_fum(g), chi_fum_edge(g))
    for h in (relabel(g, perm), rotate_rotations(g, 1), rotate_rotations(g, 2)):
        assert (chi_fum(h), chi_fum_edge(h)) == expected
