"""Threshold decision procedure over the candidate-set spanning tree.

For a positive threshold, the spanning tree of the candidate set falls
apart into components once every edge at least as long as the threshold
is removed.  A component is a viable attachment target when every
terminal reaches it through some cone edge strictly shorter than the
threshold; the set of such components is non-empty exactly when the
optimal bottleneck is strictly below the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .emst import EmstResult, UnionFind
from .yao import YaoGraph

# Below this size a plain union-find beats the sparse-graph machinery;
# threshold sweeps over small instances hammer this path.
_SMALL_M = 256

MAX_CANDIDATES = 6


@dataclass(frozen=True)
class ComponentLabeling:
    """Component ids of the candidate points below one threshold."""

    threshold: float
    label: np.ndarray
    component_count: int


@dataclass(frozen=True)
class SolverContext:
    """Immutable preprocessing bundle shared by all decision calls."""

    P: np.ndarray
    S: np.ndarray
    emst: EmstResult
    yao: YaoGraph


def forest_components(emst: EmstResult, threshold: float) -> ComponentLabeling:
    """Label the components left after deleting edges with weight >= threshold.

    The threshold is a squared length and must be positive; passing
    infinity keeps every edge.  Labels are contiguous ids starting at 0,
    assigned in order of first occurrence.
    """
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    m = emst.point_count
    t = int(np.searchsorted(emst.edge_w, threshold, side="left"))
    u = emst.edge_u[:t]
    v = emst.edge_v[:t]
    if m <= _SMALL_M:
        uf = UnionFind(m)
        for a, b in zip(u.tolist(), v.tolist()):
            uf.union(a, b)
        label = np.empty(m, dtype=np.int64)
        ids: dict[int, int] = {}
        for i in range(m):
            r = uf.find(i)
            if r not in ids:
                ids[r] = len(ids)
            label[i] = ids[r]
        return ComponentLabeling(threshold, label, len(ids))
    g = csr_matrix((np.ones(len(u), dtype=np.int8), (u, v)), shape=(m, m))
    ncomp, label = connected_components(g, directed=False)
    return ComponentLabeling(threshold, label.astype(np.int64), int(ncomp))


def candidate_components(ctx: SolverContext, labeling: ComponentLabeling) -> frozenset:
    """Components that every terminal can enter below the labeling threshold.

    Seeds with the components reachable from terminal 0 (at most six, one
    per cone edge) and keeps those covered by all remaining terminals.
    """
    yao = ctx.yao
    n = len(ctx.P)
    label = labeling.label
    qual = yao.w < labeling.threshold
    edge_label = label[yao.s_idx]

    end0 = int(np.searchsorted(yao.p_idx, 0, side="right"))
    seeds = np.unique(edge_label[:end0][qual[:end0]])
    assert len(seeds) <= MAX_CANDIDATES
    kept = []
    for j in seeds.tolist():
        mask = qual & (edge_label == j)
        covered = np.zeros(n, dtype=bool)
        covered[yao.p_idx[mask]] = True
        if covered.all():
            kept.append(int(j))
    assert len(kept) <= MAX_CANDIDATES
    return frozenset(kept)


def compare_to_optimal(ctx: SolverContext, threshold: float) -> frozenset:
    """Candidate component ids at a threshold; non-empty iff optimum < threshold."""
    return candidate_components(ctx, forest_components(ctx.emst, threshold))
