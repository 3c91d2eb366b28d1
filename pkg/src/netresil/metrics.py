"""Structural indices: centrality, clustering, components, path statistics.

Definitions used throughout, on an undirected simple graph:

* degree centrality      DC(i) = number of edges incident on i
* betweenness centrality BC(i) = sum over unordered pairs {u,w} (u,w != i)
                          of (geodesics u-w through i) / (geodesics u-w);
                          disconnected pairs contribute 0; unnormalized
* closeness centrality   CC(i) = 1 / sum of hop distances from i to every
                          node reachable from i; isolated nodes score 0
* local clustering       2 * (edges among neighbors of i) / (k_i * (k_i-1))

Shortest-path distances come from per-source BFS (delegated to
scipy.sparse.csgraph); betweenness uses single-source Brandes accumulation.
All functions are pure; ties in rankings break by ascending node id.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _scipy_components
from scipy.sparse.csgraph import dijkstra as _scipy_dijkstra

from .graph import Graph


@dataclass
class CentralityScores:
    """Per-node score table with a deterministic ranking.

    ``ranking`` sorts node ids by descending score, ties broken by
    ascending id, and is a permutation of the node set.
    """

    kind: str  # one of "dc", "bc", "cc"
    scores: dict[int, float]
    ranking: tuple[int, ...]

    @classmethod
    def from_map(cls, kind: str, scores: dict[int, float]) -> "CentralityScores":
        ranking = tuple(sorted(scores, key=lambda v: (-scores[v], v)))
        return cls(kind=kind, scores=scores, ranking=ranking)


@dataclass
class NetworkSummary:
    """One-row structural summary of a graph."""

    vertex_count: int
    edge_count: int
    mean_degree: float
    apl: float | None
    diameter: int | None
    component_count: int
    largest_component_fraction: float

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "mean_degree": self.mean_degree,
            "apl": self.apl,
            "diameter": self.diameter,
            "component_count": self.component_count,
            "largest_component_fraction": self.largest_component_fraction,
        }


@dataclass
class CcdfPoint:
    """P(degree > k) for one observed degree value k."""

    k: int
    prob: float


class DegreeClass(Enum):
    A = "A"  # k <= lo
    B = "B"  # lo < k <= hi
    C = "C"  # k > hi


def _csr(g: Graph) -> csr_matrix:
    ids, _, adj = g._dense()
    n = len(ids)
    lengths = np.fromiter((len(a) for a in adj), dtype=np.int64, count=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(lengths, out=indptr[1:])
    indices = np.fromiter(
        (w for nbrs in adj for w in nbrs), dtype=np.int64, count=int(indptr[-1])
    )
    data = np.ones(len(indices), dtype=np.float64)
    return csr_matrix((data, indices, indptr), shape=(n, n))


def _distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances; np.inf marks unreachable pairs."""
    n = g.node_count
    if n == 0:
        return np.zeros((0, 0))
    return _scipy_dijkstra(_csr(g), directed=True, unweighted=True)


def _component_labels(g: Graph) -> tuple[int, np.ndarray]:
    n = g.node_count
    if n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    count, labels = _scipy_components(_csr(g), directed=False)
    return int(count), labels


def degree_centrality(g: Graph) -> CentralityScores:
    return CentralityScores.from_map("dc", {v: g.degree(v) for v in g.nodes})


def betweenness_centrality(g: Graph) -> CentralityScores:
    """Unnormalized betweenness via Brandes single-source accumulation."""
    ids, _, adj = g._dense()
    n = len(ids)
    score = [0.0] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0.0] * n
        preds: list[list[int] | None] = [None] * n
        dist[s] = 0
        sigma[s] = 1.0
        order = [s]
        qi = 0
        while qi < len(order):
            v = order[qi]
            qi += 1
            dv1 = dist[v] + 1
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv1
                    order.append(w)
                if dist[w] == dv1:
                    sigma[w] += sv
                    pw = preds[w]
                    if pw is None:
                        preds[w] = [v]
                    else:
                        pw.append(v)
        delta = [0.0] * n
        for w in reversed(order):
            pw = preds[w]
            if pw is not None:
                coeff = (1.0 + delta[w]) / sigma[w]
                for v in pw:
                    delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]
    # each unordered pair was accumulated from both endpoints
    return CentralityScores.from_map("bc", {ids[i]: score[i] / 2.0 for i in range(n)})


def closeness_centrality(g: Graph) -> CentralityScores:
    ids = g.nodes
    dist = _distance_matrix(g)
    finite = np.isfinite(dist)
    sums = np.where(finite, dist, 0.0).sum(axis=1)
    scores = {
        ids[i]: (float(1.0 / sums[i]) if sums[i] > 0 else 0.0) for i in range(len(ids))
    }
    return CentralityScores.from_map("cc", scores)


def local_clustering(g: Graph, i: int) -> float:
    nbrs = g.neighbors(i)
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = sum(len(g.neighbors(v) & nbrs) for v in nbrs) // 2
    return 2.0 * links / (k * (k - 1))


def clustering_by_degree(g: Graph) -> dict[int, float]:
    """Mean local clustering per observed degree, degrees < 2 excluded."""
    sums: dict[int, list[float]] = {}
    for v in g.nodes:
        k = g.degree(v)
        if k < 2:
            continue
        sums.setdefault(k, []).append(local_clustering(g, v))
    return {k: sum(vals) / len(vals) for k, vals in sorted(sums.items())}


def connected_component_count(g: Graph) -> int:
    return _component_labels(g)[0]


def largest_component(g: Graph) -> tuple[frozenset[int], float]:
    """Maximum-cardinality component and its fraction of |V|.

    Ties between equal-sized components break toward the one containing
    the smallest node id.  The empty graph yields (frozenset(), 0.0).
    """
    n = g.node_count
    if n == 0:
        return frozenset(), 0.0
    _, labels = _component_labels(g)
    sizes = np.bincount(labels)
    max_size = int(sizes.max())
    ids = g.nodes
    chosen = -1
    for i, v in enumerate(ids):  # ids ascending, so first hit has smallest id
        if sizes[labels[i]] == max_size:
            chosen = labels[i]
            break
    members = frozenset(ids[i] for i in range(n) if labels[i] == chosen)
    return members, max_size / n


def _largest_component_size(g: Graph) -> int:
    if g.node_count == 0:
        return 0
    _, labels = _component_labels(g)
    return int(np.bincount(labels).max())


def average_path_length(g: Graph) -> float:
    """Mean hop distance over mutually reachable pairs; error if none."""
    dist = _distance_matrix(g)
    finite = np.isfinite(dist)
    pair_count = int(finite.sum()) - g.node_count  # drop the diagonal
    if pair_count <= 0:
        raise ValueError("APL undefined: graph has no connected pair")
    return float(np.where(finite, dist, 0.0).sum()) / pair_count


def diameter(g: Graph) -> int:
    """Maximum hop distance over mutually reachable pairs; error if none."""
    dist = _distance_matrix(g)
    finite = np.isfinite(dist)
    if int(finite.sum()) - g.node_count <= 0:
        raise ValueError("diameter undefined: graph has no connected pair")
    return int(np.where(finite, dist, 0.0).max())


def degree_ccdf(g: Graph) -> list[CcdfPoint]:
    """P(degree > k) for each observed degree k, ascending in k."""
    n = g.node_count
    if n == 0:
        raise ValueError("degree CCDF undefined for an empty graph")
    degrees = np.sort(np.array([g.degree(v) for v in g.nodes]))
    points = []
    for k in np.unique(degrees):
        exceed = int(n - np.searchsorted(degrees, k, side="right"))
        points.append(CcdfPoint(k=int(k), prob=exceed / n))
    return points


def degree_rank(g: Graph) -> list[tuple[int, int, int]]:
    """(rank, node id, degree) rows: rank 1 is the largest degree."""
    by_degree = sorted(g.nodes, key=lambda v: (-g.degree(v), v))
    return [(rank, v, g.degree(v)) for rank, v in enumerate(by_degree, start=1)]


def classify_by_degree(g: Graph, lo: int = 15, hi: int = 85) -> dict[int, DegreeClass]:
    """Partition nodes into degree classes A (k<=lo), B (lo<k<=hi), C (k>hi)."""
    if not 0 <= lo < hi:
        raise ValueError(f"thresholds must satisfy 0 <= lo < hi, got lo={lo}, hi={hi}")
    out = {}
    for v in g.nodes:
        k = g.degree(v)
        if k <= lo:
            out[v] = DegreeClass.A
        elif k <= hi:
            out[v] = DegreeClass.B
        else:
            out[v] = DegreeClass.C
    return out


def summarize(g: Graph) -> NetworkSummary:
    n = g.node_count
    m = g.edge_count
    component_count = connected_component_count(g)
    fraction = largest_component(g)[1]
    dist = _distance_matrix(g)
    finite = np.isfinite(dist)
    pair_count = int(finite.sum()) - n
    if pair_count > 0:
        masked = np.where(finite, dist, 0.0)
        apl: float | None = float(masked.sum()) / pair_count
        diam: int | None = int(masked.max())
    else:
        apl = None
        diam = None
    return NetworkSummary(
        vertex_count=n,
        edge_count=m,
        mean_degree=(2.0 * m / n) if n else 0.0,
        apl=apl,
        diameter=diam,
        component_count=component_count,
        largest_component_fraction=fraction,
    )
