"""Graph parsing, arc indexing, and the classical matrices."""

import numpy as np
import pytest

from qqwalk.graph import (
    Graph,
    GraphFormatError,
    complete_graph,
    cycle_graph,
    parse_graph,
    path_graph,
    petersen_graph,
    random_connected_graph,
    star_graph,
)
from qqwalk.linalg import eigenvalues, multisets_match

K3_TEXT = "3 3\n0 1\n1 2\n2 0"
STAR_TEXT = "4 3\n3 0\n3 1\n3 2"


class TestParsing:
    def test_triangle(self):
        g = parse_graph(K3_TEXT)
        assert g.n == 3 and g.m == 3 and g.num_arcs == 6

    def test_star_center_vertex_three(self):
        g = parse_graph(STAR_TEXT)
        assert g.n == 4 and g.m == 3
        assert g.degree(3) == 3
        assert all(g.degree(v) == 1 for v in range(3))

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="line 2.*loop"):
            parse_graph("2 1\n0 0")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            parse_graph("3 3\n0 1\n1 0\n1 2")

    def test_disconnected_rejected(self):
        with pytest.raises(GraphFormatError, match="not connected"):
            parse_graph("4 2\n0 1\n2 3")

    def test_out_of_range_vertex_rejected(self):
        with pytest.raises(GraphFormatError, match="line 3.*out of range"):
            parse_graph("3 2\n0 1\n1 5")

    def test_comments_and_blank_lines(self):
        g = parse_graph("# triangle\n3 3\n\n0 1\n1 2\n# last\n2 0\n")
        assert g.m == 3

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError, match="declares"):
            parse_graph("3 3\n0 1\n1 2")


class TestArcs:
    def test_inverse_pairing(self):
        g = parse_graph(K3_TEXT)
        for arc in g.arcs:
            inv = g.inverse_arc(arc)
            assert inv.origin == arc.terminal
            assert inv.terminal == arc.origin
            assert g.inverse_arc(inv).index == arc.index

    def test_input_order_determines_arcs(self):
        g = parse_graph(K3_TEXT)
        assert (g.arcs[0].origin, g.arcs[0].terminal) == (0, 1)
        assert (g.arcs[1].origin, g.arcs[1].terminal) == (1, 0)
        assert (g.arcs[4].origin, g.arcs[4].terminal) == (2, 0)


class TestDegreesAndBetti:
    def test_triangle_degrees(self):
        g = complete_graph(3)
        assert all(g.degree(u) == 2 for u in range(3))

    def test_path_endpoint(self):
        g = path_graph(2)
        assert g.degree(0) == 1

    def test_degree_sum(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            g = random_connected_graph(rng, int(rng.integers(2, 9)))
            assert sum(g.degree(u) for u in range(g.n)) == 2 * g.m

    def test_betti_number(self):
        assert complete_graph(3).betti_number == 1
        assert star_graph(3).betti_number == 0
        assert star_graph(3).is_tree
        assert cycle_graph(5).betti_number == 1
        assert petersen_graph().betti_number == 6

    def test_out_of_range_degree(self):
        with pytest.raises(ValueError):
            complete_graph(3).degree(5)


class TestTransitionMatrix:
    def test_triangle(self):
        t = complete_graph(3).transition_matrix()
        assert np.allclose(t, (np.ones((3, 3)) - np.eye(3)) / 2)

    def test_star(self):
        t = star_graph(3).transition_matrix()
        assert np.allclose(t[3, :3], 1 / 3) and t[3, 3] == 0
        for leaf in range(3):
            assert t[leaf, 3] == 1.0

    def test_row_stochastic(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            g = random_connected_graph(rng, int(rng.integers(2, 9)))
            assert np.allclose(g.transition_matrix().sum(axis=1), 1.0)

    def test_triangle_spectrum(self):
        vals = eigenvalues(complete_graph(3).transition_matrix()).eigenvalues
        assert multisets_match(vals, np.array([1.0, -0.5, -0.5]), tol=1e-10)
