import math

import pytest

from cliquefan.finder import (
    DegreeBoundReport,
    DensityParams,
    HypothesisViolation,
    check_violation,
    extend_clique,
    fan_at_vertex_r1,
    find_odd_fan,
    peel_dense_subgraph,
    replay_certificate,
    rotate_clique,
    search_thresholds,
    tuple_lex_less,
)
from cliquefan.generators import (
    FanShape,
    gnp_random,
    rt_lower_construction,
    turan_graph,
)
from cliquefan.graphs import Graph, induced_subgraph, is_clique, is_independent, min_degree
from cliquefan.invariants import max_independent_set
from cliquefan.oracle import graph_from_code, pair_count
from cliquefan.witness import CliqueWitness, FanEmbedding, find_fan, verify_fan
from util import complete, cycle, petersen, star, wheel4


class TestTupleOrder:
    def test_zero_tuple_is_minimum(self):
        assert tuple_lex_less((0, 0, 0), (1, 0, 0))

    def test_irreflexive(self):
        assert not tuple_lex_less((2, 1, 0), (2, 1, 0))

    def test_first_coordinate_dominates(self):
        assert not tuple_lex_less((2, 0, 0), (1, 1, 1))
        assert tuple_lex_less((1, 1, 1), (2, 0, 0))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            tuple_lex_less((1, 2), (1, 2, 3))


class TestDensityParams:
    def test_validation(self):
        DensityParams(0.3, 0.5, 0.3)
        with pytest.raises(ValueError):
            DensityParams(0.6, 0.5, 0.1)
        with pytest.raises(ValueError):
            DensityParams(0.3, 1.5, 0.1)
        with pytest.raises(ValueError):
            DensityParams(0.3, 0.5, 0.4)  # c >= sqrt(beta eps)


class TestPeel:
    def test_complete_graph_survives_whole(self):
        res = peel_dense_subgraph(complete(10), DensityParams(0.3, 0.5, 0.3))
        assert res == tuple(range(10))

    def test_star_is_edge_deficient(self):
        res = peel_dense_subgraph(star(99), DensityParams(0.3, 0.5, 0.3))
        assert isinstance(res, HypothesisViolation)
        assert res.kind == "edge-deficiency"
        assert res.observed == 99
        assert check_violation(star(99), res)

    def test_dense_random_graph_postconditions(self):
        g = gnp_random(500, 0.8, 7)
        p = DensityParams(0.35, 0.1, 0.15)
        assert g.size >= p.beta * g.n * g.n * (1 + p.eps)
        res = peel_dense_subgraph(g, p)
        assert isinstance(res, tuple)
        assert len(res) > p.c * g.n
        sub, _ = induced_subgraph(g, res)
        assert min_degree(sub)[1] > 2 * p.beta * (1 + p.eps / 2) * len(res)

    def test_deterministic(self):
        g = gnp_random(60, 0.4, 19)
        p = DensityParams(0.15, 0.4, 0.2)
        assert peel_dense_subgraph(g, p) == peel_dense_subgraph(g, p)


class TestExtendClique:
    def test_complete_graph(self):
        assert extend_clique(complete(6), (0, 1, 2), 3, 0.3) == 3

    def test_complete_tripartite(self):
        g = rt_lower_construction(9, 3, "empty")  # parts {0,1,2}, {3,4,5}, {6,7,8}
        assert extend_clique(g, (0, 3), 2, 0.3) == 6

    def test_low_degree_violation(self):
        g = cycle(4)
        res = extend_clique(g, (0,), 2, 0.3)
        assert isinstance(res, HypothesisViolation)
        assert res.kind == "low-degree-vertex"
        assert res.observed == 2 and res.threshold == pytest.approx(2.4)
        assert check_violation(g, res)

    def test_extension_failure_violation(self):
        g = Graph(3, [(0, 1)])
        res = extend_clique(g, (0, 1), 2, 0.3, degree_threshold=0.0)
        assert isinstance(res, HypothesisViolation)
        assert res.kind == "clique-extension-failure"
        assert check_violation(g, res)

    def test_restriction_mask(self):
        g = complete(6)
        assert extend_clique(g, (0, 1), 3, 0.3, within=[0, 1, 4, 5], degree_threshold=0.0) == 4

    def test_empty_clique_seeds_smallest_vertex(self):
        assert extend_clique(complete(4), (), 2, 0.3) == 0

    def test_oversized_clique_rejected(self):
        with pytest.raises(ValueError, match="exceeds"):
            extend_clique(complete(6), (0, 1, 2, 3), 3, 0.3)

    def test_non_clique_rejected(self):
        with pytest.raises(ValueError, match="not a clique"):
            extend_clique(cycle(5), (0, 2), 2, 0.3)


class TestRotateClique:
    def test_common_neighbor_branch(self):
        g = rt_lower_construction(6, 3, "empty")  # parts {0,1}, {2,3}, {4,5}
        res = rotate_clique(g, (0, 3), 2, 0.3, 0.01)
        assert isinstance(res, CliqueWitness)
        assert res.vertices == (0, 3, 4)

    def test_swap_branch(self):
        # x and y sit in the bucket of the first vertex; the swap trades
        # it for the adjacent pair.
        g = Graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
        res = rotate_clique(g, (0, 1), 2, 0.3, 0.01, degree_threshold=0.0)
        assert isinstance(res, CliqueWitness)
        assert res.vertices == (1, 2, 3)
        assert len(set(res.vertices) & {0, 1}) >= 1

    def test_triangle_free_graph_yields_independent_witness(self):
        g = cycle(5)
        res = rotate_clique(g, (0, 1), 2, 0.3, 0.0, degree_threshold=0.0, ind_threshold=0.0)
        assert isinstance(res, HypothesisViolation)
        assert res.kind == "large-independent-set"
        assert res.vertices == (2,)
        assert check_violation(g, res)

    def test_low_degree_violation(self):
        res = rotate_clique(cycle(6), (0, 1), 2, 0.3, 0.01)
        assert isinstance(res, HypothesisViolation)
        assert res.kind == "low-degree-vertex"

    def test_dichotomy_on_turan_and_dense_samples(self):
        graphs = [turan_graph(n, q) for q in range(2, 7) for n in (12, 25)]
        graphs += [gnp_random(20, 0.7, 300 + s) for s in range(30)]
        for g in graphs:
            for size in (1, 2, 3):
                d = _greedy_clique(g, size)
                if d is None:
                    continue
                res = rotate_clique(g, d, 2, 0.3, 0.0, degree_threshold=0.0, ind_threshold=0.0)
                if isinstance(res, CliqueWitness):
                    assert is_clique(g, res.vertices)
                    assert len(res.vertices) == len(d) + 1
                    assert len(set(res.vertices) & set(d)) >= len(d) - 1
                else:
                    assert res.kind == "large-independent-set"
                    assert is_independent(g, res.vertices)

    def test_clique_size_bounds(self):
        with pytest.raises(ValueError):
            rotate_clique(complete(8), (0, 1, 2, 3, 4), 2, 0.3, 0.01)
        with pytest.raises(ValueError):
            rotate_clique(complete(3), (), 1, 0.3, 0.01)


def _greedy_clique(g, size):
    clique: list[int] = []
    for v in range(g.n):
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
            if len(clique) == size:
                return tuple(clique)
    return None


class TestFanAtVertexR1:
    def test_wheel(self):
        emb = fan_at_vertex_r1(wheel4(), 2)
        assert isinstance(emb, FanEmbedding)
        assert emb.center == 0
        assert verify_fan(wheel4(), emb, FanShape(2, 3)) is None

    def test_star_reports_leaf_independent_set(self):
        rep = fan_at_vertex_r1(star(99), 1)
        assert isinstance(rep, DegreeBoundReport)
        assert rep.densest_vertex == 0
        assert len(rep.independent_set) == 99

    def test_petersen_is_triangle_free(self):
        rep = fan_at_vertex_r1(petersen(), 1)
        assert isinstance(rep, DegreeBoundReport)
        assert rep.nu_by_vertex == (0,) * 10

    def test_degree_bound_from_report(self):
        # Wherever no fan exists, d(x) <= alpha(N(x)) + 2 (k - 1).
        for seed in range(60):
            g = gnp_random(24, 0.12, 61_000 + seed)
            k = 1 + seed % 3
            res = fan_at_vertex_r1(g, k)
            if isinstance(res, FanEmbedding):
                continue
            for x in range(g.n):
                sub, _ = induced_subgraph(g, g.neighbors(x))
                alpha = len(max_independent_set(sub))
                assert g.degree(x) <= alpha + 2 * (k - 1)

    def test_agrees_with_find_fan_exhaustively(self):
        for n in range(5):
            for code in range(1 << pair_count(n)):
                g = graph_from_code(n, code)
                for k in (1, 2):
                    a = fan_at_vertex_r1(g, k)
                    b = find_fan(g, FanShape(k, 3))
                    if isinstance(a, FanEmbedding):
                        assert a == b
                    else:
                        assert b is None

    def test_agrees_with_find_fan_on_samples(self):
        for seed in range(150):
            g = gnp_random(6 + seed % 4, (0.25, 0.5, 0.75)[seed % 3], 71_000 + seed)
            for k in (1, 2, 3):
                a = fan_at_vertex_r1(g, k)
                b = find_fan(g, FanShape(k, 3))
                if isinstance(a, FanEmbedding):
                    assert a == b
                else:
                    assert b is None


class TestThresholds:
    def test_delta_value(self):
        th = search_thresholds(100, 2, 2, 0.2)
        assert th.delta == pytest.approx(math.sqrt(2) / 10 * 0.04)
        assert th.delta == pytest.approx(0.005656854249, abs=1e-9)

    def test_deletion_bound(self):
        assert search_thresholds(100, 2, 2, 0.2).deletion_bound == 15

    def test_boundary_eps_rejected(self):
        with pytest.raises(ValueError):
            search_thresholds(10, 1, 2, 0.0)

    def test_peel_degree_exceeds_clique_step_needs(self):
        for r in (2, 3, 4):
            for eps in (0.1, 0.2, 0.3):
                th = search_thresholds(50, 2, r, eps)
                assert th.peel_degree_coef >= th.degree_coef
                assert th.peel_c < math.sqrt(th.peel_beta * th.peel_eps)

    def test_edge_threshold_matches_peel_hypothesis(self):
        th = search_thresholds(40, 2, 3, 0.2)
        assert th.edge_threshold == pytest.approx(
            th.peel_beta * (1 + th.peel_eps) * 40 * 40
        )


class TestFindOddFan:
    def test_turan_positive(self):
        g = turan_graph(25, 5)
        out, cert = find_odd_fan(g, 2, 2, 0.2)
        assert isinstance(out, FanEmbedding)
        assert verify_fan(g, out, FanShape(2, 5)) is None
        assert replay_certificate(g, cert)
        augments = sum(1 for s in cert.steps if s["kind"] == "augment")
        assert augments <= 2 ** 3

    def test_turan_negative(self):
        g = turan_graph(20, 4)
        out, cert = find_odd_fan(g, 1, 2, 0.2)
        assert isinstance(out, HypothesisViolation)
        assert check_violation(g, out)
        assert cert.outcome["type"] == "violation"
        assert replay_certificate(g, cert)

    def test_complete_host_is_tight(self):
        g = complete(9)
        out, _ = find_odd_fan(g, 2, 2, 0.2)
        assert isinstance(out, FanEmbedding)
        assert verify_fan(g, out, FanShape(2, 5)) is None

    def test_tuple_sequence_strictly_increases(self):
        g = turan_graph(49, 7)
        out, cert = find_odd_fan(g, 3, 3, 0.2)
        assert isinstance(out, FanEmbedding)
        tuples = [tuple(s["tuple_before"]) for s in cert.steps if s["kind"] == "augment"]
        tuples.append(tuple(cert.steps[-1]["tuple_after"])
                      if cert.steps[-1]["kind"] == "augment" else None)
        seq = [t for t in tuples if t is not None]
        assert all(tuple_lex_less(a, b) for a, b in zip(seq, seq[1:]))

    def test_r1_delegates_to_triangle_scan(self):
        out, cert = find_odd_fan(wheel4(), 2, 1, 0.2)
        assert isinstance(out, FanEmbedding)
        assert cert.steps[0]["kind"] == "r1-scan"

    def test_r1_violation_checks(self):
        g = star(60)
        out, _ = find_odd_fan(g, 1, 1, 0.2)
        assert isinstance(out, HypothesisViolation)
        assert check_violation(g, out)

    def test_r1_sparse_graph_is_edge_deficient(self):
        g = cycle(30)
        out, _ = find_odd_fan(g, 1, 1, 0.2)
        assert isinstance(out, HypothesisViolation)
        assert out.kind == "edge-deficiency"
        assert check_violation(g, out)

    def test_every_violation_on_random_hosts_checks(self):
        for seed in range(40):
            g = gnp_random(30, (0.2, 0.5, 0.8)[seed % 3], 81_000 + seed)
            out, cert = find_odd_fan(g, 2, 2, 0.2)
            if isinstance(out, HypothesisViolation):
                assert check_violation(g, out)
            else:
                assert verify_fan(g, out, FanShape(2, 5)) is None
            assert replay_certificate(g, cert)

    def test_lower_bound_construction_never_yields_fan(self):
        g = rt_lower_construction(30, 2, "c5")
        out, _ = find_odd_fan(g, 1, 2, 0.2)
        assert isinstance(out, HypothesisViolation)
        assert check_violation(g, out)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            find_odd_fan(complete(5), 0, 2, 0.2)
        with pytest.raises(ValueError):
            find_odd_fan(complete(5), 1, 2, 0.7)  # peel slack would leave (0, 1)
