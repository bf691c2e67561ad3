import pytest

from windmill.graphs import Digraph, WindmillParams, adjacency_matrix, build_windmill
from windmill.walks import (
    Walk,
    count_walks,
    count_walks_matrix,
    enumerate_walks,
    is_valid_walk,
    shortest_walk_length,
    windmill_length_n_minus_1_support,
)

D23_PARAMS = WindmillParams(2, 3)
D23 = build_windmill(D23_PARAMS)


class TestWalkType:
    def test_length(self):
        assert Walk((1, 2, 3)).length == 2
        assert Walk((4,)).length == 0

    def test_concatenation_adds_lengths(self):
        p = Walk((2, 3, 1))
        q = Walk((1, 4, 5))
        joined = p.then(q)
        assert joined == Walk((2, 3, 1, 4, 5))
        assert joined.length == p.length + q.length

    def test_concatenation_endpoint_mismatch(self):
        with pytest.raises(ValueError):
            Walk((1, 2)).then(Walk((3, 1)))

    def test_validity_against_host(self):
        assert is_valid_walk(D23, Walk((1, 2, 3, 1, 4)))
        assert not is_valid_walk(D23, Walk((1, 3)))


class TestCounting:
    def test_trivial_walk(self):
        for v in range(1, 6):
            assert count_walks(D23, v, v, 0) == 1

    def test_length_two(self):
        assert count_walks(D23, 1, 3, 2) == 1

    def test_invalid_labels(self):
        with pytest.raises(ValueError):
            count_walks(D23, 0, 3, 1)
        with pytest.raises(ValueError):
            count_walks(D23, 1, 6, 1)

    def test_multiplicity_2n_minus_1(self):
        for i in range(1, 6):
            for j in range(1, 6):
                assert count_walks(D23, i, j, 5) == 2 * count_walks(D23, i, j, 2)

    def test_matrix_len_zero_is_identity(self):
        w = count_walks_matrix(D23, 0)
        assert w == adjacency_matrix(D23) ** 0

    def test_matrix_len_one_is_adjacency(self):
        assert count_walks_matrix(D23, 1) == adjacency_matrix(D23)

    def test_matrix_len_three_diagonal(self):
        w = count_walks_matrix(D23, 3)
        assert w[0, 0] == 2
        assert all(w[i, i] == 1 for i in range(1, 5))

    @pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (2, 4), (3, 5)])
    def test_oracle_equals_matrix_powers(self, m, n):
        g = build_windmill(WindmillParams(m, n))
        a = adjacency_matrix(g)
        power = a ** 0
        for length in range(2 * n):
            assert count_walks_matrix(g, length) == power
            power = power @ a


class TestEnumeration:
    def test_trivial(self):
        result = enumerate_walks(D23, 4, 4, 0)
        assert result.walks == (Walk((4,)),)
        assert not result.truncated

    def test_unique_length_two(self):
        result = enumerate_walks(D23, 2, 1, 2)
        assert result.walks == (Walk((2, 3, 1)),)

    def test_two_walks_of_length_five(self):
        result = enumerate_walks(D23, 1, 3, 5)
        assert len(result.walks) == 2
        assert result.walks == (Walk((1, 2, 3, 1, 2, 3)), Walk((1, 4, 5, 1, 2, 3)))
        # each is one full cycle followed by the walk <1,2,3>
        tail = Walk((1, 2, 3))
        assert result.walks == (Walk((1, 2, 3, 1)).then(tail),
                                Walk((1, 4, 5, 1)).then(tail))

    def test_lexicographic_order_and_validity(self):
        result = enumerate_walks(D23, 1, 1, 6)
        seqs = [w.vertices for w in result.walks]
        assert seqs == sorted(seqs)
        assert all(is_valid_walk(D23, w) for w in result.walks)
        assert len(seqs) == count_walks(D23, 1, 1, 6)

    def test_cap_sets_truncation_flag(self):
        g = build_windmill(WindmillParams(3, 3))
        result = enumerate_walks(g, 1, 1, 9, cap=5)  # 27 closed walks exist
        assert result.truncated
        assert len(result.walks) == 5

    def test_cap_not_triggered_exactly_at_count(self):
        g = build_windmill(WindmillParams(3, 3))
        result = enumerate_walks(g, 1, 1, 9, cap=27)
        assert not result.truncated
        assert len(result.walks) == 27

    def test_json_shape(self):
        obj = enumerate_walks(D23, 2, 1, 2).to_json()
        assert obj == {"from": 2, "to": 1, "length": 2,
                       "walks": [[2, 3, 1]], "truncated": False}


class TestShortestWalk:
    def test_self(self):
        assert shortest_walk_length(D23, 3, 3) == 0

    def test_through_hub(self):
        assert shortest_walk_length(D23, 3, 2) == 2  # <3,1,2>

    def test_cross_cycle(self):
        # <2,3,1,4,5> is the shortest route, four edges
        assert shortest_walk_length(D23, 2, 5) == 4

    def test_unreachable_is_none(self):
        g = Digraph(3, frozenset({(1, 2)}))
        assert shortest_walk_length(g, 2, 3) is None


class TestSupportPattern:
    def test_single_cycle(self):
        assert windmill_length_n_minus_1_support(WindmillParams(1, 3)) == [
            (1, 3), (2, 1), (3, 2)]

    def test_two_triangles(self):
        assert windmill_length_n_minus_1_support(D23_PARAMS) == sorted([
            (1, 3), (1, 5), (2, 1), (4, 1), (3, 2), (5, 4), (3, 4), (5, 2)])

    @pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (2, 4), (3, 4), (4, 3), (3, 5)])
    def test_count_formula_and_oracle_agreement(self, m, n):
        p = WindmillParams(m, n)
        support = windmill_length_n_minus_1_support(p)
        assert len(support) == m + m + m * (n - 2) + m * (m - 1) * (n - 2)
        counts = count_walks_matrix(build_windmill(p), n - 1)
        assert counts.support() == support
        assert all(counts[i - 1, j - 1] == 1 for i, j in support)
