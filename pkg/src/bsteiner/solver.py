"""End-to-end solver for bottleneck-optimal full Steiner trees.

Pipeline: spanning tree of the candidate set plus the six-cone terminal
graph, a binary search over the distinct tree edge weights driven by the
threshold decision procedure, then assembly of the at most six candidate
trees and selection of the one with the smallest bottleneck.  All weights
are squared lengths end to end.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .decision import (
    ComponentLabeling,
    SolverContext,
    candidate_components,
    forest_components,
)
from .emst import UnionFind, euclidean_mst
from .geometry import as_points, check_disjoint, pair_squared_distances
from .yao import yao_bipartite, yao_bruteforce


@dataclass(frozen=True)
class FullSteinerTree:
    """A tree on the terminals plus a candidate subset, terminals as leaves.

    `skeleton_edges` span `component_vertices`; `external_edges[i]` is the
    candidate index the i-th terminal hangs off.  `bottleneck` is the
    largest squared edge length in the whole tree.
    """

    P: np.ndarray
    S: np.ndarray
    component_vertices: np.ndarray
    skeleton_edges: np.ndarray
    external_edges: np.ndarray
    bottleneck: float


@dataclass(frozen=True)
class SolveReport:
    tree: FullSteinerTree
    lambda_star: float  # squared bottleneck length
    threshold_index: int
    chosen_component: int
    candidate_count: int
    timings: dict


def preprocess(P, S, yao_impl: str = "fast") -> SolverContext:
    """Validate an instance and build the shared context for decision calls."""
    P = as_points(P, "P")
    S = as_points(S, "S")
    if len(P) == 0:
        raise ValueError("P must be non-empty")
    if len(S) == 0:
        raise ValueError("S must be non-empty")
    check_disjoint(P, S)
    if yao_impl == "fast":
        yao = yao_bipartite(P, S)
    elif yao_impl == "brute":
        yao = yao_bruteforce(P, S)
    else:
        raise ValueError(f"unknown yao_impl: {yao_impl!r}")
    return SolverContext(P, S, euclidean_mst(S), yao)


def threshold_value(emst, index: int) -> float:
    """Value of the augmented threshold sequence: 0, distinct weights, inf."""
    k = len(emst.thresholds)
    if index == 0:
        return 0.0
    if index == k + 1:
        return np.inf
    return float(emst.thresholds[index - 1])


def binary_search_threshold(ctx: SolverContext) -> int:
    """Smallest index whose threshold makes the candidate set non-empty.

    Searches 1..k+1 over the augmented sequence; the infinite sentinel at
    k+1 always succeeds, so the index exists.
    """
    thresholds = ctx.emst.thresholds
    k = len(thresholds)
    # duplicate candidates put a zero-weight threshold first; the candidate
    # set below a non-positive threshold is empty by definition, so skip it
    lo = int(np.searchsorted(thresholds, 0.0, side="right")) + 1
    hi = k + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if compare_nonempty(ctx, threshold_value(ctx.emst, mid)):
            hi = mid
        else:
            lo = mid + 1
    return lo


def compare_nonempty(ctx: SolverContext, threshold: float) -> bool:
    return bool(candidate_components(ctx, forest_components(ctx.emst, threshold)))


def build_tree_for_component(
    ctx: SolverContext, labeling: ComponentLabeling, j: int, threshold: float
) -> FullSteinerTree:
    """Assemble the full Steiner tree anchored on component j.

    The skeleton is every surviving spanning-tree edge inside the
    component; each terminal takes its shortest qualifying cone edge into
    the component (ties on length broken by candidate index).
    """
    if not 0 <= j < labeling.component_count:
        raise ValueError("component not feasible at lambda")
    label = labeling.label
    comp = np.flatnonzero(label == j).astype(np.int64)

    t = int(np.searchsorted(ctx.emst.edge_w, threshold, side="left"))
    eu = ctx.emst.edge_u[:t]
    ev = ctx.emst.edge_v[:t]
    ew = ctx.emst.edge_w[:t]
    keep = label[eu] == j
    skeleton = np.column_stack((eu[keep], ev[keep]))
    skel_w = ew[keep]

    yao = ctx.yao
    n = len(ctx.P)
    qual = (yao.w < threshold) & (label[yao.s_idx] == j)
    p = yao.p_idx[qual]
    s = yao.s_idx[qual]
    w = yao.w[qual]
    order = np.lexsort((s, w, p))
    p, s, w = p[order], s[order], w[order]
    uniq, first = np.unique(p, return_index=True)
    if len(uniq) != n:
        raise ValueError("component not feasible at lambda")
    ext = s[first]
    ext_w = w[first]

    b = float(max(np.max(skel_w, initial=0.0), ext_w.max()))
    return FullSteinerTree(ctx.P, ctx.S, comp, skeleton, ext, b)


def bottleneck(tree: FullSteinerTree) -> float:
    """Largest squared edge length, recomputed from the coordinates."""
    ext_w = pair_squared_distances(tree.P, tree.S[tree.external_edges])
    if len(tree.skeleton_edges):
        skel_w = pair_squared_distances(
            tree.S[tree.skeleton_edges[:, 0]], tree.S[tree.skeleton_edges[:, 1]]
        )
        return float(max(skel_w.max(), ext_w.max()))
    return float(ext_w.max())


def solve(P, S, yao_impl: str = "fast") -> SolveReport:
    """Compute an optimal bottleneck full Steiner tree.

    Returns the tree together with the squared optimum, the index found by
    the binary search, the chosen component, and per-phase wall times in
    nanoseconds.  Runs are deterministic for identical inputs (timings
    aside).
    """
    t0 = time.perf_counter_ns()
    ctx = preprocess(P, S, yao_impl)
    t1 = time.perf_counter_ns()
    ell = binary_search_threshold(ctx)
    lam = threshold_value(ctx.emst, ell)
    t2 = time.perf_counter_ns()
    labeling = forest_components(ctx.emst, lam)
    J = candidate_components(ctx, labeling)
    best = None
    for j in sorted(J):
        tree = build_tree_for_component(ctx, labeling, j, lam)
        if best is None or tree.bottleneck < best[0].bottleneck:
            best = (tree, j)
    assert best is not None
    t3 = time.perf_counter_ns()
    tree, j = best
    return SolveReport(
        tree=tree,
        lambda_star=tree.bottleneck,
        threshold_index=ell,
        chosen_component=j,
        candidate_count=len(J),
        timings={
            "preprocess_ns": t1 - t0,
            "search_ns": t2 - t1,
            "assemble_ns": t3 - t2,
        },
    )


def validate_full_steiner_tree(tree: FullSteinerTree) -> None:
    """Raise ValueError unless the tree satisfies every structural invariant.

    Checks: non-empty vertex subset, skeleton is a spanning tree of it,
    external edges land inside it (one per terminal, so terminals are
    leaves), and the stored bottleneck matches a recomputation.
    """
    n, m = len(tree.P), len(tree.S)
    comp = tree.component_vertices
    if comp.size == 0:
        raise ValueError("component_vertices is empty")
    if comp.min() < 0 or comp.max() >= m:
        raise ValueError("component vertex out of range")
    if np.any(np.diff(comp) <= 0):
        raise ValueError("component_vertices must be sorted and unique")
    members = set(comp.tolist())

    skel = tree.skeleton_edges
    if len(skel) != len(comp) - 1:
        raise ValueError("skeleton edge count must be |S'| - 1")
    uf = UnionFind(m)
    for a, b in skel.tolist():
        if a not in members or b not in members:
            raise ValueError("skeleton edge leaves the component")
        if a == b or not uf.union(a, b):
            raise ValueError("skeleton contains a cycle")
    roots = {uf.find(c) for c in comp.tolist()}
    if len(roots) != 1:
        raise ValueError("skeleton does not connect the component")

    ext = tree.external_edges
    if len(ext) != n:
        raise ValueError("one external edge per terminal required")
    if not set(ext.tolist()) <= members:
        raise ValueError("external edge leaves the component")

    if bottleneck(tree) != tree.bottleneck:
        raise ValueError("stored bottleneck does not match the edges")
