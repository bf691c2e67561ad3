import random

import pytest

from windmill.graphs import (
    Digraph,
    WindmillParams,
    adjacency_matrix,
    build_windmill,
    cycle_vertex_set,
    cycle_vertices,
    export_dot,
    windmill_json,
)
from windmill.matrices import RationalMatrix

PARAM_GRID = [(m, n) for m in range(1, 5) for n in range(3, 7)]


class TestParams:
    def test_rejects_short_cycle(self):
        with pytest.raises(ValueError, match="n must be"):
            WindmillParams(2, 2)

    def test_rejects_zero_copies(self):
        with pytest.raises(ValueError, match="m must be"):
            WindmillParams(0, 3)

    def test_vertex_count(self):
        assert WindmillParams(4, 3).vertex_count == 9
        assert WindmillParams(2, 4).vertex_count == 7


class TestBuild:
    def test_single_triangle(self):
        g = build_windmill(WindmillParams(1, 3))
        assert g.vertex_count == 3
        assert g.edges == {(1, 2), (2, 3), (3, 1)}

    def test_four_triangles(self):
        g = build_windmill(WindmillParams(4, 3))
        assert g.vertex_count == 9
        assert len(g.edges) == 12
        # each triangle shares the hub only
        for k in range(1, 5):
            assert cycle_vertex_set(WindmillParams(4, 3), k) & {1} == {1}

    def test_two_squares(self):
        g = build_windmill(WindmillParams(2, 4))
        assert g.vertex_count == 7
        assert g.edges == {(1, 2), (2, 3), (3, 4), (4, 1),
                           (1, 5), (5, 6), (6, 7), (7, 1)}

    @pytest.mark.parametrize("m,n", PARAM_GRID)
    def test_size_formulas(self, m, n):
        g = build_windmill(WindmillParams(m, n))
        assert g.vertex_count == m * (n - 1) + 1
        assert len(g.edges) == m * n

    @pytest.mark.parametrize("m,n", PARAM_GRID)
    def test_degrees(self, m, n):
        g = build_windmill(WindmillParams(m, n))
        assert g.out_degree(1) == m and g.in_degree(1) == m
        for v in range(2, g.vertex_count + 1):
            assert g.out_degree(v) == 1 and g.in_degree(v) == 1


class TestCycles:
    def test_first_triangle(self):
        assert cycle_vertices(WindmillParams(2, 3), 1) == [1, 2, 3, 1]

    def test_second_triangle(self):
        assert cycle_vertices(WindmillParams(2, 3), 2) == [1, 4, 5, 1]

    def test_fourth_triangle(self):
        assert cycle_vertices(WindmillParams(4, 3), 4) == [1, 8, 9, 1]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cycle_vertices(WindmillParams(2, 3), 3)

    @pytest.mark.parametrize("m,n", PARAM_GRID)
    def test_cover_and_pairwise_hub_intersection(self, m, n):
        p = WindmillParams(m, n)
        sets = [cycle_vertex_set(p, k) for k in range(1, m + 1)]
        union = set().union(*sets)
        assert union == set(range(1, p.vertex_count + 1))
        for a in range(m):
            for b in range(a + 1, m):
                assert sets[a] & sets[b] == {1}


class TestAdjacency:
    def test_edgeless(self):
        assert adjacency_matrix(Digraph(3)) == RationalMatrix.zeros(3)

    def test_single_triangle(self):
        m = adjacency_matrix(build_windmill(WindmillParams(1, 3)))
        assert m == RationalMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])

    def test_two_triangles(self):
        m = adjacency_matrix(build_windmill(WindmillParams(2, 3)))
        assert m.support() == [(1, 2), (1, 4), (2, 3), (3, 1), (4, 5), (5, 1)]

    @pytest.mark.parametrize("m,n", PARAM_GRID)
    def test_row_sums_are_out_degrees(self, m, n):
        g = build_windmill(WindmillParams(m, n))
        a = adjacency_matrix(g)
        for i in range(g.vertex_count):
            assert sum(a[i, j] for j in range(g.vertex_count)) == g.out_degree(i + 1)

    def test_relabeling_conjugates_adjacency(self):
        rng = random.Random(5)
        g = build_windmill(WindmillParams(3, 4))
        a = adjacency_matrix(g)
        size = g.vertex_count
        for _ in range(5):
            sigma = list(range(1, size + 1))
            rng.shuffle(sigma)
            relabeled = Digraph(size, frozenset(
                (sigma[x - 1], sigma[y - 1]) for x, y in g.edges))
            perm = RationalMatrix([
                [1 if sigma[i] == j + 1 else 0 for j in range(size)]
                for i in range(size)])
            assert adjacency_matrix(relabeled) == perm.transpose() @ a @ perm


class TestSerialization:
    def test_dot_single_vertex(self):
        text = export_dot(Digraph(1))
        assert text.count(";") == 1
        assert "->" not in text

    def test_dot_single_triangle(self):
        text = export_dot(build_windmill(WindmillParams(1, 3)))
        assert text.count("->") == 3
        lines = text.splitlines()
        assert lines[0] == "digraph {" and lines[-1] == "}"

    def test_dot_four_triangles_edge_count(self):
        assert export_dot(build_windmill(WindmillParams(4, 3))).count("->") == 12

    def test_dot_deterministic(self):
        g = build_windmill(WindmillParams(3, 5))
        assert export_dot(g) == export_dot(g)

    def test_graph_json(self):
        obj = windmill_json(WindmillParams(2, 4))
        assert obj["m"] == 2 and obj["n"] == 4 and obj["vertices"] == 7
        assert obj["edges"] == sorted(obj["edges"])
        assert len(obj["edges"]) == 8

    def test_digraph_rejects_bad_labels(self):
        with pytest.raises(ValueError, match="outside vertex range"):
            Digraph(2, frozenset({(1, 3)}))
