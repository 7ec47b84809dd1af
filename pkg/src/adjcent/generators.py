"""Seeded random weighted graphs and degree-preserving rewiring.

Randomness comes from numpy's PCG64 bit generator. ``make_rng(seed)`` seeds
PCG64 through ``numpy.random.SeedSequence(seed)``; replicate ``k`` of an
experiment with base seed ``s`` uses ``replicate_seed(s, k)``, the SplitMix64
finalizer applied to ``s XOR k``. Identical seeds give identical graphs on
every platform numpy supports.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .graph import WeightedGraph, is_connected

MASK64 = (1 << 64) - 1


def splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def replicate_seed(base_seed, k):
    return splitmix64((int(base_seed) ^ int(k)) & MASK64)


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed) & MASK64)))


@dataclass(frozen=True)
class ModelConfig:
    n: int = 200
    p: float = 0.2
    mu: float = 10.0
    sigma: float = 1.0
    seed: int = 0
    require_connected: bool = False
    max_retries: int = 100

    def __post_init__(self):
        if self.n < 1:
            raise DataError(f"n must be >= 1, got {self.n}")
        if not 0 < self.p < 1:
            raise DataError(f"p must lie in (0, 1), got {self.p}")
        if self.sigma < 0:
            raise DataError(f"sigma must be >= 0, got {self.sigma}")
        if self.max_retries < 1:
            raise DataError("max_retries must be >= 1")


def _labels(n):
    return [str(i) for i in range(n)]


def _retry(build, cfg, rng, model):
    for _ in range(cfg.max_retries):
        g = build(rng)
        if not cfg.require_connected or is_connected(g):
            return g
    raise DataError(f"{model}: no connected graph in {cfg.max_retries} attempts "
                    f"(n={cfg.n}, p={cfg.p})")


def _positive_normal(rng, mu, sigma, size):
    w = rng.normal(mu, sigma, size)
    bad = w <= 0
    while bad.any():
        w[bad] = rng.normal(mu, sigma, int(bad.sum()))
        bad = w <= 0
    return w


def er_normal(cfg, rng=None):
    """G(n, p) topology with Normal(mu, sigma) weights; non-positive draws are redrawn."""
    if cfg.mu <= 0:
        raise DataError(f"mu must be positive, got {cfg.mu}")
    rng = make_rng(cfg.seed) if rng is None else rng
    iu, iv = np.triu_indices(cfg.n, k=1)

    def build(rng):
        keep = rng.random(iu.size) < cfg.p
        u, v = iu[keep], iv[keep]
        if cfg.sigma == 0:
            w = np.full(u.size, float(cfg.mu))
        else:
            w = _positive_normal(rng, cfg.mu, cfg.sigma, u.size)
        return WeightedGraph(_labels(cfg.n), zip(u.tolist(), v.tolist(), w.tolist()))

    return _retry(build, cfg, rng, "er_normal")


def wrg(n, p, seed, require_connected=False, max_retries=100, rng=None):
    """Weighted random graph: every pair gets a Geometric weight with P(w = k) = p^k (1 - p).

    Pairs with weight 0 are not edges. Sampling is by inverse CDF,
    ``w = floor(ln U / ln p)`` with U uniform on (0, 1].
    """
    cfg = ModelConfig(n=n, p=p, seed=seed, require_connected=require_connected,
                      max_retries=max_retries)
    rng = make_rng(seed) if rng is None else rng
    iu, iv = np.triu_indices(n, k=1)
    log_p = math.log(p)

    def build(rng):
        u01 = 1.0 - rng.random(iu.size)
        w = np.floor(np.log(u01) / log_p)
        keep = w >= 1
        return WeightedGraph(_labels(n), zip(iu[keep].tolist(), iv[keep].tolist(),
                                             w[keep].tolist()))

    return _retry(build, cfg, rng, "wrg")


def swap_targets(a, b, c, d, present):
    """Edges replacing {a,b}, {c,d} by the switch, or None if it is not allowed.

    The result is ({a,d}, {b,c}); a self-loop or an edge already in
    ``present`` (a set of frozensets) rejects the switch.
    """
    if a == d or b == c:
        return None
    ad, bc = frozenset((a, d)), frozenset((b, c))
    if ad in present or bc in present or ad == bc:
        return None
    return ad, bc


def rewire(g, swaps, seed=0, rng=None, budget_factor=100):
    """Apply ``swaps`` successful edge switches, weights travelling with their edges.

    Each attempt picks two distinct edges uniformly and orients the second
    one at random, so both possible switches of a pair are reachable. The
    weight of {a,b} moves to {a,d} and that of {c,d} to {b,c}. Degrees and
    the weight multiset are preserved; strengths and topology are not.
    """
    if swaps < 0:
        raise DataError("swaps must be >= 0")
    if swaps == 0:
        return g
    if g.m < 2:
        raise DataError("rewiring needs at least two edges")
    rng = make_rng(seed) if rng is None else rng
    ends = [list(p) for p in g.pairs]
    weights = g.weights.tolist()
    present = {frozenset(p) for p in g.pairs}
    budget = budget_factor * g.m
    done = 0
    while done < swaps:
        for _ in range(budget):
            i, j = int(rng.integers(g.m)), int(rng.integers(g.m - 1))
            j += j >= i
            a, b = ends[i]
            c, d = ends[j] if rng.random() < 0.5 else ends[j][::-1]
            new = swap_targets(a, b, c, d, present)
            if new is not None:
                break
        else:
            raise DataError(f"no valid edge switch found in {budget} attempts")
        present -= {frozenset((a, b)), frozenset((c, d))}
        present |= set(new)
        ends[i], ends[j] = [a, d], [b, c]
        done += 1
    return WeightedGraph(g.labels, [(u, v, w) for (u, v), w in zip(ends, weights)])
