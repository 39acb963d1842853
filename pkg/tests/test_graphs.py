import pytest

from cliquefan.generators import gnp_random, rt_lower_construction
from cliquefan.graphs import (
    Graph,
    common_neighbors,
    induced_subgraph,
    is_clique,
    is_independent,
    min_degree,
)
from util import complete, cycle, petersen, star


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(3, [(0, 3)])

    def test_degree_sum_is_twice_size(self):
        for seed in range(40):
            g = gnp_random(1 + seed % 13, 0.4, seed)
            assert sum(g.degree(v) for v in range(g.n)) == 2 * g.size

    def test_edges_are_sorted_and_complete(self):
        g = petersen()
        es = list(g.edges())
        assert es == sorted(es)
        assert len(es) == g.size == 15


class TestInducedSubgraph:
    def test_clique_is_hereditary(self):
        sub, mapping = induced_subgraph(complete(4), [0, 1, 2])
        assert sub == complete(3)
        assert mapping == {0: 0, 1: 1, 2: 2}

    def test_non_adjacent_pair_in_cycle(self):
        sub, _ = induced_subgraph(cycle(5), [0, 2])
        assert sub.n == 2 and sub.size == 0

    def test_petersen_outer_cycle(self):
        sub, mapping = induced_subgraph(petersen(), [0, 1, 2, 3, 4])
        assert sub == cycle(5)
        assert sorted(mapping) == [0, 1, 2, 3, 4]

    def test_full_set_is_identity(self):
        g = petersen()
        sub, mapping = induced_subgraph(g, range(10))
        assert sub == g
        assert all(mapping[v] == v for v in range(10))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            induced_subgraph(complete(3), [0, 5])


class TestMinDegree:
    def test_complete(self):
        assert min_degree(complete(5)) == (0, 4)

    def test_star_tie_breaks_to_smallest_leaf(self):
        assert min_degree(star(4)) == (1, 1)

    def test_petersen_regular(self):
        assert min_degree(petersen()) == (0, 3)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            min_degree(Graph(0))


class TestCommonNeighbors:
    def test_complete(self):
        assert common_neighbors(complete(5), [0, 1]) == (2, 3, 4)

    def test_cycle_has_no_triangle(self):
        assert common_neighbors(cycle(5), [0, 1]) == ()

    def test_complete_tripartite(self):
        g = rt_lower_construction(9, 3, "empty")  # parts {0,1,2}, {3,4,5}, {6,7,8}
        assert common_neighbors(g, [0, 3]) == (6, 7, 8)

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            common_neighbors(complete(3), [])

    def test_result_disjoint_from_input(self):
        for seed in range(30):
            g = gnp_random(8, 0.5, 100 + seed)
            if g.size == 0:
                continue
            u, v = next(g.edges())
            hit = common_neighbors(g, [u, v])
            assert not set(hit) & {u, v}


def test_membership_predicates():
    g = cycle(5)
    assert is_clique(g, [0, 1])
    assert not is_clique(g, [0, 1, 2])
    assert is_independent(g, [0, 2])
    assert not is_independent(g, [0, 1])
