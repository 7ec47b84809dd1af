"""Weighted undirected graphs, edge-list I/O and shortest paths.

Nodes carry string labels externally and dense integer indices internally.
An absent edge has weight 0; stored weights are always strictly positive
and finite.
"""
from __future__ import annotations

import heapq
import io
import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from ._fp import checked_powers
from .errors import DataError


class WeightedGraph:
    """Simple undirected graph with strictly positive edge weights.

    Treat instances as immutable; every operation in the package only reads them.
    ``edges`` are ``(u, v, w)`` triples over node indices ``0..n-1``.
    """

    __slots__ = ("labels", "_pairs", "_weights", "_adj", "_index")

    def __init__(self, labels, edges=()):
        self.labels = tuple(str(x) for x in labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise DataError("duplicate node label")
        n = len(self.labels)
        adj = [dict() for _ in range(n)]
        pairs, weights = [], []
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < n and 0 <= v < n):
                raise DataError(f"edge ({u}, {v}) references an unknown node")
            if u == v:
                raise DataError(f"self-loop on node {self.labels[u]!r}")
            if not (w > 0 and math.isfinite(w)):
                raise DataError(f"weight of edge {{{self.labels[u]}, {self.labels[v]}}} "
                                f"must be positive and finite, got {w!r}")
            if v in adj[u]:
                raise DataError(f"duplicate edge {{{self.labels[u]}, {self.labels[v]}}}")
            adj[u][v] = w
            adj[v][u] = w
            pairs.append((u, v))
            weights.append(w)
        self._adj = adj
        self._pairs = tuple(pairs)
        self._weights = np.array(weights, dtype=float)
        self._weights.flags.writeable = False

    @classmethod
    def from_labeled_edges(cls, edges, nodes=()):
        """Build from ``(label_u, label_v, w)`` triples; nodes in first-appearance order."""
        index = {}
        for lab in nodes:
            index.setdefault(str(lab), len(index))
        triples = []
        for u, v, w in edges:
            iu = index.setdefault(str(u), len(index))
            iv = index.setdefault(str(v), len(index))
            triples.append((iu, iv, w))
        return cls(list(index), triples)

    @property
    def n(self):
        return len(self.labels)

    @property
    def m(self):
        return len(self._pairs)

    @property
    def pairs(self):
        return self._pairs

    @property
    def weights(self):
        return self._weights

    def edges(self):
        return [(u, v, float(w)) for (u, v), w in zip(self._pairs, self._weights)]

    def neighbors(self, u):
        return self._adj[self.index(u)]

    def weight(self, u, v):
        return self._adj[self.index(u)].get(self.index(v), 0.0)

    def index(self, u):
        """Resolve a node index or label to an index."""
        if isinstance(u, str):
            try:
                return self._index[u]
            except KeyError:
                raise DataError(f"unknown node {u!r}") from None
        if isinstance(u, (int, np.integer)) and 0 <= u < len(self.labels):
            return int(u)
        raise DataError(f"unknown node {u!r}")

    def with_weights(self, weights):
        """Same topology, new weights (aligned with ``edges()`` order)."""
        return WeightedGraph(self.labels, [(u, v, w) for (u, v), w in zip(self._pairs, weights)])

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.labels == other.labels and self._adj == other._adj

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ValidationReport:
    node_count: int
    edge_count: int
    is_connected: bool
    min_degree: int
    weight_range: tuple[float, float] | None


def validate(g):
    deg = degrees(g)
    return ValidationReport(
        node_count=g.n,
        edge_count=g.m,
        is_connected=is_connected(g),
        min_degree=int(deg.min()) if g.n else 0,
        weight_range=(float(g.weights.min()), float(g.weights.max())) if g.m else None,
    )


def _lines(text):
    if isinstance(text, str):
        text = io.StringIO(text)
    for lineno, raw in enumerate(text, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) != 3:
            raise DataError(f"line {lineno}: expected 'u<TAB>v<TAB>w', got {raw.rstrip()!r}")
        u, v, w = (f.strip() for f in fields)
        try:
            w = float(w)
        except ValueError:
            raise DataError(f"line {lineno}: weight {w!r} is not a number") from None
        if not (w > 0 and math.isfinite(w)):
            raise DataError(f"line {lineno}: weight must be positive and finite, got {w!r}")
        yield lineno, u, v, w


def load_edge_list(text):
    """Parse a tab-separated ``u v w`` edge list (string or text stream).

    Lines starting with ``#`` are comments. Nodes are indexed in order of
    first appearance. Self-loops and repeated pairs (in either orientation)
    are errors.
    """
    seen = set()
    edges = []
    for lineno, u, v, w in _lines(text):
        if u == v:
            raise DataError(f"line {lineno}: self-loop on node {u!r}")
        key = frozenset((u, v))
        if key in seen:
            raise DataError(f"line {lineno}: duplicate edge {{{u}, {v}}}")
        seen.add(key)
        edges.append((u, v, w))
    return WeightedGraph.from_labeled_edges(edges)


def load_arcs(text):
    """Parse the same format as a list of directed ``(u, v, w)`` arcs."""
    return [(u, v, w) for _, u, v, w in _lines(text)]


def read_edge_list(path, directed=False):
    with open(path, encoding="utf-8") as fh:
        if directed:
            return symmetrize_directed(load_arcs(fh))
        return load_edge_list(fh)


def emit_edge_list(g):
    return "".join(f"{g.labels[u]}\t{g.labels[v]}\t{w!r}\n" for u, v, w in g.edges())


def write_edge_list(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_edge_list(g))


def symmetrize_directed(arcs):
    """Collapse arcs into undirected edges, w({u,v}) = w(u,v) + w(v,u).

    Self-loops are dropped (their endpoint is kept as a node). A repeated
    arc with the same orientation is an error rather than being summed.
    """
    nodes, total, seen = {}, {}, set()
    for u, v, w in arcs:
        u, v, w = str(u), str(v), float(w)
        if not (w > 0 and math.isfinite(w)):
            raise DataError(f"arc ({u}, {v}) has non-positive weight {w!r}")
        nodes.setdefault(u, None)
        nodes.setdefault(v, None)
        if u == v:
            continue
        if (u, v) in seen:
            raise DataError(f"duplicate arc ({u}, {v})")
        seen.add((u, v))
        key = (u, v) if (v, u) not in total else (v, u)
        total[key] = total.get(key, 0.0) + w
    return WeightedGraph.from_labeled_edges(
        [(u, v, w) for (u, v), w in total.items()], nodes=list(nodes))


def invert_weights(g):
    return g.with_weights(1.0 / g.weights)


def degree(g, u):
    return len(g.neighbors(u))


def strength(g, u):
    return float(sum(g.neighbors(u).values()))


def degrees(g):
    deg = np.zeros(g.n, dtype=np.int64)
    for u, v in g.pairs:
        deg[u] += 1
        deg[v] += 1
    return deg


def strengths(g):
    # same summation order as strength(): neighbor insertion order
    return np.array([strength(g, u) for u in range(g.n)], dtype=float)


def is_connected(g):
    if g.n <= 1:
        return True
    ncomp, _ = connected_components(_csr(g, np.ones(g.m)), directed=False)
    return ncomp == 1


def unweighted_distances(g, u):
    """Hop counts from ``u`` by breadth-first search; unreachable nodes get +inf."""
    u = g.index(u)
    dist = np.full(g.n, math.inf)
    dist[u] = 0.0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g._adj[x]:
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1.0
                queue.append(y)
    return dist


def weighted_distances(g, u, alpha=1.0):
    """Dijkstra distances from ``u`` with every edge costing ``w ** alpha``.

    Raises ComputabilityError when some ``w ** alpha`` over- or underflows.
    """
    u = g.index(u)
    cost = dict(zip(g.pairs, checked_powers(g.weights, alpha).tolist()))
    dist = [math.inf] * g.n
    dist[u] = 0.0
    done = [False] * g.n
    heap = [(0.0, u)]
    while heap:
        d, x = heapq.heappop(heap)
        if done[x]:
            continue
        done[x] = True
        for y in g._adj[x]:
            c = cost[(x, y)] if (x, y) in cost else cost[(y, x)]
            nd = d + c
            if nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return np.array(dist)


def _csr(g, data):
    rows = [u for u, _ in g.pairs]
    cols = [v for _, v in g.pairs]
    return csr_matrix((np.asarray(data, dtype=float), (rows, cols)), shape=(g.n, g.n))


def distance_matrix(g, alpha=None):
    """All-pairs distances: hop counts when ``alpha`` is None, else with ``w ** alpha`` costs."""
    if g.n == 0:
        return np.zeros((0, 0))
    if alpha is None:
        return shortest_path(_csr(g, np.ones(g.m)), method="D", directed=False, unweighted=True)
    return shortest_path(_csr(g, checked_powers(g.weights, alpha)), method="D", directed=False)
