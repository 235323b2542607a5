"""Euclidean minimum spanning tree of the Steiner candidate set.

The production path triangulates the points and runs Kruskal over the
triangulation edges (the EMST is always a subgraph of the Delaunay
triangulation).  Exactly collinear or otherwise degenerate inputs fall
back to provably sufficient candidate sets.  A dense Prim implementation
serves as the independent reference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import Delaunay, QhullError

from .geometry import as_points, pair_squared_distances


class UnionFind:
    """Array-backed disjoint sets with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True)
class EmstResult:
    """Spanning tree edges sorted by (weight, u, v), plus distinct weights.

    Weights are squared lengths.  `thresholds` lists each distinct edge
    weight exactly once, strictly increasing.
    """

    point_count: int
    edge_u: np.ndarray
    edge_v: np.ndarray
    edge_w: np.ndarray
    thresholds: np.ndarray

    @property
    def edges(self) -> list[tuple[int, int, float]]:
        """Edge triples (u, v, squared length) for small-scale inspection."""
        return list(
            zip(self.edge_u.tolist(), self.edge_v.tolist(), self.edge_w.tolist())
        )


def _empty_result(m: int) -> EmstResult:
    z = np.zeros(0, dtype=np.int64)
    return EmstResult(m, z, z.copy(), np.zeros(0), np.zeros(0))


def _kruskal(m: int, u: np.ndarray, v: np.ndarray, w: np.ndarray) -> EmstResult | None:
    """Minimum spanning tree over candidate edges; None if they do not connect."""
    order = np.lexsort((v, u, w))
    u, v, w = u[order], v[order], w[order]
    uf = UnionFind(m)
    keep = np.zeros(len(u), dtype=bool)
    taken = 0
    for i, (a, b) in enumerate(zip(u.tolist(), v.tolist())):
        if uf.union(a, b):
            keep[i] = True
            taken += 1
            if taken == m - 1:
                break
    if taken != m - 1:
        return None
    eu, ev, ew = u[keep], v[keep], w[keep]
    return EmstResult(m, eu, ev, ew, np.unique(ew))


def _exactly_collinear(pts: np.ndarray) -> bool:
    base = pts[0]
    d = pts[-1] - base
    cross = d[0] * (pts[:, 1] - base[1]) - d[1] * (pts[:, 0] - base[0])
    return bool((cross == 0.0).all())


def _candidate_edges(S: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Candidate (u, v) pairs guaranteed to contain a minimum spanning tree."""
    m = len(S)
    norm = S + 0.0  # fold -0.0 so duplicates compare equal bytewise
    key = norm[:, 0] + 1j * norm[:, 1]
    uniq, inverse = np.unique(key, return_inverse=True)
    nu = len(uniq)

    # Smallest original index represents each distinct coordinate; the other
    # occupants attach to it with zero-length edges.
    rep = np.full(nu, m, dtype=np.int64)
    np.minimum.at(rep, inverse, np.arange(m, dtype=np.int64))
    rep_of = rep[inverse]
    dup = np.flatnonzero(rep_of != np.arange(m))
    zu, zv = rep_of[dup], dup

    upts = np.column_stack((uniq.real, uniq.imag))

    if nu == 1:
        return zu, zv
    if nu == 2:
        cu = np.array([min(rep[0], rep[1])], dtype=np.int64)
        cv = np.array([max(rep[0], rep[1])], dtype=np.int64)
        return np.concatenate((zu, cu)), np.concatenate((zv, cv))

    pairs = None
    if _exactly_collinear(upts):
        # uniq is lexicographically sorted, which orders collinear points
        # along their line; the MST is the chain of consecutive points.
        pairs = np.column_stack((rep[:-1], rep[1:]))
    else:
        try:
            tri = Delaunay(upts)
            if len(tri.coplanar) == 0:
                sim = tri.simplices
                e = np.concatenate(
                    (sim[:, [0, 1]], sim[:, [1, 2]], sim[:, [2, 0]]), axis=0
                )
                pairs = rep[e]
        except QhullError:
            pairs = None
    if pairs is None:
        iu, iv = np.triu_indices(nu, 1)
        pairs = np.column_stack((rep[iu], rep[iv]))

    cu = np.minimum(pairs[:, 0], pairs[:, 1])
    cv = np.maximum(pairs[:, 0], pairs[:, 1])
    dedup = np.unique(cu * np.int64(m) + cv)
    cu, cv = dedup // m, dedup % m
    return np.concatenate((zu, cu)), np.concatenate((zv, cv))


def euclidean_mst(S) -> EmstResult:
    """Euclidean minimum spanning tree of a point set, squared weights.

    Edges come out sorted by (weight, u, v); ties between equally light
    edges are broken lexicographically so the tree is deterministic even
    when the MST is not unique.  Duplicate coordinates are allowed and
    join the tree through zero-length edges.
    """
    S = as_points(S, "S")
    m = len(S)
    if m == 0:
        raise ValueError("S must be non-empty")
    if m == 1:
        return _empty_result(1)
    u, v = _candidate_edges(S)
    w = pair_squared_distances(S[u], S[v])
    result = _kruskal(m, u, v, w)
    if result is None:
        # Degenerate triangulation left the candidates disconnected; the
        # dense graph always works.
        iu, iv = np.triu_indices(m, 1)
        iu = iu.astype(np.int64)
        iv = iv.astype(np.int64)
        result = _kruskal(m, iu, iv, pair_squared_distances(S[iu], S[iv]))
        assert result is not None
    return result


def mst_prim_reference(S) -> EmstResult:
    """Dense O(m^2) Prim scan; the reference oracle for euclidean_mst."""
    S = as_points(S, "S")
    m = len(S)
    if m == 0:
        raise ValueError("S must be non-empty")
    if m == 1:
        return _empty_result(1)
    in_tree = np.zeros(m, dtype=bool)
    in_tree[0] = True
    best_w = pair_squared_distances(S, np.broadcast_to(S[0], (m, 2)))
    best_from = np.zeros(m, dtype=np.int64)
    eu = np.empty(m - 1, dtype=np.int64)
    ev = np.empty(m - 1, dtype=np.int64)
    ew = np.empty(m - 1)
    masked = best_w.copy()
    masked[0] = np.inf
    for t in range(m - 1):
        j = int(np.argmin(masked))
        eu[t], ev[t], ew[t] = best_from[j], j, best_w[j]
        in_tree[j] = True
        masked[j] = np.inf
        d = pair_squared_distances(S, np.broadcast_to(S[j], (m, 2)))
        upd = (d < best_w) & ~in_tree
        best_w[upd] = d[upd]
        best_from[upd] = j
        masked[upd] = d[upd]
    a = np.minimum(eu, ev)
    b = np.maximum(eu, ev)
    order = np.lexsort((b, a, ew))
    return EmstResult(m, a[order], b[order], ew[order], np.unique(ew))
