import itertools
import math
import os

import numpy as np

from adjcent.graph import WeightedGraph, load_edge_list

SAMPLE_PATH = os.path.join(os.path.dirname(__file__), os.pardir, "scripts", "data",
                           "sample_graph.tsv")
SAMPLE_TEXT = "A\tB\t100\nD\tA\t106\nB\tC\t104\nD\tB\t103\nB\tE\t102\nE\tD\t105\n"


def sample_graph():
    return load_edge_list(SAMPLE_TEXT)


def random_connected_graph(rng, n, p=0.3, weights=None):
    """Random spanning tree plus G(n, p) extras; weights drawn by ``weights(rng, m)``."""
    perm = rng.permutation(n)
    pairs = {tuple(sorted((int(perm[i]), int(perm[rng.integers(i)])))) for i in range(1, n)}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            pairs.add((u, v))
    pairs = sorted(pairs)
    if weights is None:
        w = rng.uniform(0.5, 10.0, len(pairs))
    else:
        w = np.broadcast_to(np.asarray(weights(rng, len(pairs)), dtype=float), (len(pairs),))
    return WeightedGraph([f"n{i}" for i in range(n)],
                         [(u, v, float(x)) for (u, v), x in zip(pairs, w)])


def floyd_warshall(g, cost):
    """All-pairs distances by dynamic programming over Python numbers.

    ``cost(w)`` maps a weight to an edge length; exact types such as
    Fraction are preserved.
    """
    inf = math.inf
    d = [[0 if u == v else inf for v in range(g.n)] for u in range(g.n)]
    for u, v, w in g.edges():
        c = cost(w)
        d[u][v] = d[v][u] = c
    for k in range(g.n):
        dk = d[k]
        for u in range(g.n):
            duk = d[u][k]
            if duk == inf:
                continue
            du = d[u]
            for v in range(g.n):
                if duk + dk[v] < du[v]:
                    du[v] = duk + dk[v]
    return d


def random_lines(seed, n_max=200):
    """Slopes and intercepts from mixed uniform/discrete draws with parallel clusters."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, n_max + 1))
    style = seed % 4
    if style == 0:
        a, b = rng.uniform(-10, 10, n), rng.uniform(-10, 10, n)
    elif style == 1:
        a, b = rng.integers(-3, 4, n).astype(float), rng.integers(-50, 51, n).astype(float)
    elif style == 2:
        # near-degenerate slopes: a few clusters separated by one ulp to 1e-9
        base = rng.uniform(-1, 1, 4)
        a = base[rng.integers(0, 4, n)] * (1 + rng.choice([0, 1e-15, 1e-12, 1e-9], n))
        b = rng.normal(0, 1, n)
    else:
        a = np.where(rng.random(n) < 0.5, rng.integers(-2, 3, n), rng.normal(0, 5, n))
        b = rng.normal(0, 100, n)
    # drop coincident duplicates
    _, keep = np.unique(np.stack([a, b]), axis=1, return_index=True)
    keep.sort()
    return a[keep], b[keep]
