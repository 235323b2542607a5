import math

import numpy as np
import pytest

from bsteiner.decision import compare_to_optimal, forest_components
from bsteiner.generators import (
    gen_maxgap_instance,
    gen_membership_instance,
    gen_random_instance,
)
from bsteiner.geometry import squared_distance_matrix
from bsteiner.oracle import brute_force_optimum
from bsteiner.solver import (
    binary_search_threshold,
    bottleneck,
    build_tree_for_component,
    preprocess,
    solve,
    threshold_value,
    validate_full_steiner_tree,
)

COLLINEAR_S = [(0, 0), (1, 0), (2, 0)]
COLLINEAR_P = [(-1, 0), (3, 0)]


def test_preprocess_examples():
    ctx = preprocess([(1, 0)], [(0, 0)])
    assert len(ctx.emst.edge_w) == 0
    assert ctx.yao.edge_count() == 1
    ctx = preprocess(COLLINEAR_P, COLLINEAR_S)
    assert len(ctx.emst.edge_w) == 2
    assert ctx.emst.thresholds.tolist() == [1.0]


def test_preprocess_errors():
    with pytest.raises(ValueError, match="non-empty"):
        preprocess([], [(0, 0)])
    with pytest.raises(ValueError, match="non-empty"):
        preprocess([(0, 0)], [])
    with pytest.raises(ValueError, match="disjoint"):
        preprocess([(0, 0)], [(0, 0)])
    with pytest.raises(ValueError, match="yao_impl"):
        preprocess([(1, 0)], [(0, 0)], yao_impl="nope")


def test_binary_search_single_candidate():
    ctx = preprocess([(1, 0)], [(0, 0)])
    assert binary_search_threshold(ctx) == 1  # k = 0, only the infinite slot
    assert threshold_value(ctx.emst, 1) == np.inf


def test_binary_search_collinear():
    ctx = preprocess(COLLINEAR_P, COLLINEAR_S)
    ell = binary_search_threshold(ctx)
    assert ell == 2  # the optimum equals the only finite threshold
    assert threshold_value(ctx.emst, ell) == np.inf
    assert compare_to_optimal(ctx, threshold_value(ctx.emst, 1)) == frozenset()


def test_binary_search_sandwich_on_maxgap():
    inst = gen_maxgap_instance([0, 1, 5, 6], 4, seed=1)
    ctx = preprocess(inst.P, inst.S)
    ell = binary_search_threshold(ctx)
    lam_star, _ = brute_force_optimum(inst.P, inst.S)
    assert threshold_value(ctx.emst, ell - 1) <= lam_star < threshold_value(ctx.emst, ell)


def test_build_tree_single_pair():
    ctx = preprocess([(1, 0)], [(0, 0)])
    lab = forest_components(ctx.emst, np.inf)
    tree = build_tree_for_component(ctx, lab, 0, np.inf)
    assert tree.skeleton_edges.shape == (0, 2)
    assert tree.external_edges.tolist() == [0]
    assert tree.bottleneck == 1.0
    validate_full_steiner_tree(tree)


def test_build_tree_collinear():
    ctx = preprocess(COLLINEAR_P, COLLINEAR_S)
    lab = forest_components(ctx.emst, np.inf)
    tree = build_tree_for_component(ctx, lab, 0, np.inf)
    assert sorted(map(tuple, np.sort(tree.skeleton_edges, axis=1).tolist())) == [
        (0, 1),
        (1, 2),
    ]
    assert tree.external_edges.tolist() == [0, 2]
    assert tree.bottleneck == 1.0


def test_build_tree_infeasible_component():
    ctx = preprocess(COLLINEAR_P, COLLINEAR_S)
    lab = forest_components(ctx.emst, 1.0)  # three singletons, none feasible
    with pytest.raises(ValueError, match="not feasible"):
        build_tree_for_component(ctx, lab, 0, 1.0)
    with pytest.raises(ValueError, match="not feasible"):
        build_tree_for_component(ctx, forest_components(ctx.emst, np.inf), 7, np.inf)


def test_membership_attachments():
    inst = gen_membership_instance((1, 3), 3)
    r = solve(inst.P, inst.S)
    assert r.tree.external_edges[2] == 0  # (1, 1) hangs off (1, 0)
    assert r.tree.external_edges[3] == 2  # (3, 1) hangs off (3, 0)


def test_solve_examples():
    assert solve([(1, 0)], [(0, 0)]).lambda_star == 1.0
    assert solve(COLLINEAR_P, COLLINEAR_S).lambda_star == 1.0
    inst = gen_maxgap_instance([0, 1, 5, 6], 4, seed=0)
    r = solve(inst.P, inst.S)
    assert math.sqrt(r.lambda_star) == 4.0  # the largest value gap


def test_bottleneck_recompute():
    rng = np.random.default_rng(700)
    for _ in range(20):
        P, S = gen_random_instance(
            int(rng.integers(1, 20)), int(rng.integers(1, 20)), 50.0,
            seed=int(rng.integers(1 << 31)),
        )
        tree = solve(P, S).tree
        assert bottleneck(tree) == tree.bottleneck


@pytest.mark.parametrize("seed", range(4))
def test_optimum_matches_oracle(seed):
    rng = np.random.default_rng(800 + seed)
    for _ in range(25):
        n = int(rng.integers(1, 41))
        m = int(rng.integers(1, 41))
        P, S = gen_random_instance(n, m, 100.0, seed=int(rng.integers(1 << 31)))
        r = solve(P, S)
        lam_star, witness = brute_force_optimum(P, S)
        assert r.lambda_star == lam_star
        validate_full_steiner_tree(r.tree)
        validate_full_steiner_tree(witness)


def test_sandwich_property():
    rng = np.random.default_rng(900)
    for _ in range(40):
        n = int(rng.integers(1, 25))
        m = int(rng.integers(1, 25))
        P, S = gen_random_instance(n, m, 60.0, seed=int(rng.integers(1 << 31)))
        r = solve(P, S)
        ctx_emst = preprocess(P, S).emst
        ell = r.threshold_index
        assert 1 <= ell <= len(ctx_emst.thresholds) + 1
        assert threshold_value(ctx_emst, ell - 1) <= r.lambda_star
        assert r.lambda_star < threshold_value(ctx_emst, ell)


def test_skeleton_edges_within_optimum():
    rng = np.random.default_rng(901)
    for _ in range(30):
        n = int(rng.integers(1, 20))
        m = int(rng.integers(2, 25))
        P, S = gen_random_instance(n, m, 60.0, seed=int(rng.integers(1 << 31)))
        r = solve(P, S)
        for u, v in r.tree.skeleton_edges.tolist():
            w = (S[u, 0] - S[v, 0]) ** 2 + (S[u, 1] - S[v, 1]) ** 2
            assert w <= r.lambda_star


def test_bounds_property():
    rng = np.random.default_rng(902)
    for _ in range(40):
        n = int(rng.integers(1, 25))
        m = int(rng.integers(1, 25))
        P, S = gen_random_instance(n, m, 60.0, seed=int(rng.integers(1 << 31)))
        r = solve(P, S)
        attach = squared_distance_matrix(P, S).min(axis=1).max()
        emst = preprocess(P, S).emst
        longest = emst.edge_w[-1] if len(emst.edge_w) else 0.0
        assert attach <= r.lambda_star <= max(longest, attach)


def test_deterministic_reports():
    P, S = gen_random_instance(17, 23, 40.0, seed=5)
    a = solve(P, S)
    b = solve(P, S)
    assert a.lambda_star == b.lambda_star
    assert a.threshold_index == b.threshold_index
    assert a.chosen_component == b.chosen_component
    assert a.candidate_count == b.candidate_count
    assert np.array_equal(a.tree.skeleton_edges, b.tree.skeleton_edges)
    assert np.array_equal(a.tree.external_edges, b.tree.external_edges)
    assert np.array_equal(a.tree.component_vertices, b.tree.component_vertices)


def test_brute_yao_variant_agrees():
    rng = np.random.default_rng(903)
    for _ in range(15):
        P, S = gen_random_instance(
            int(rng.integers(1, 25)), int(rng.integers(1, 25)), 60.0,
            seed=int(rng.integers(1 << 31)),
        )
        assert solve(P, S).lambda_star == solve(P, S, yao_impl="brute").lambda_star


def test_timings_present():
    r = solve([(1, 0)], [(0, 0)])
    assert set(r.timings) == {"preprocess_ns", "search_ns", "assemble_ns"}
    assert all(v >= 0 for v in r.timings.values())


def test_duplicate_candidates_spawn_zero_thresholds():
    # zero-weight tree edges must not push the search to a zero threshold
    P, S = [(0, 0)], [(1, 1), (1, 1), (5, 5)]
    r = solve(P, S)
    lam, _ = brute_force_optimum(P, S)
    assert r.lambda_star == lam == 2.0
    rng = np.random.default_rng(904)
    for _ in range(30):
        n = int(rng.integers(1, 12))
        m = int(rng.integers(2, 12))
        P, S = gen_random_instance(n, m, 20.0, seed=int(rng.integers(1 << 31)))
        S[int(rng.integers(0, m))] = S[int(rng.integers(0, m))]
        r = solve(P, S)
        lam, _ = brute_force_optimum(P, S)
        assert r.lambda_star == lam
        validate_full_steiner_tree(r.tree)
