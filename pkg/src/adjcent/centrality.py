"""Adjustable degree and closeness centralities.

Each measure is a (reach, summarization) pair:

* ``degree/prod``     k^(1-a) * s^a
* ``degree/sum``      sum over incident edges of w^a
* ``degree/log``      log2(s/k) * a + log2(k)
* ``closeness/prod``  C^(1-a) * Cw^a
* ``closeness/sum``   1 / sum_v dist_a(u, v), edge costs w^a
* ``closeness/log``   log2(Cw/C) * a + log2(C)

where k is degree, s strength, C hop-count closeness and Cw weighted
closeness. At a=0 every measure gives the unweighted benchmark and at a=1
the weighted one (log measures give their base-2 logarithms).

Logarithms are base 2 throughout. Rankings and useful intervals do not
depend on the base.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from ._fp import checked_pow, checked_powers, checked_product
from .errors import ComputabilityError, DataError
from .graph import (degree, degrees, distance_matrix, invert_weights, is_connected,
                    strength, strengths, unweighted_distances, weighted_distances)

# binary64 exponents span [-1024, 1024]
EXPONENT_LIMIT = 1024


class Reach(enum.Enum):
    DEGREE = "degree"
    CLOSENESS = "closeness"


class Summarization(enum.Enum):
    PROD = "prod"
    SUM = "sum"
    LOG = "log"


@dataclass(frozen=True)
class MeasureKind:
    reach: Reach
    summarization: Summarization

    @classmethod
    def parse(cls, text):
        """``"degree/prod"`` -> MeasureKind(Reach.DEGREE, Summarization.PROD)."""
        try:
            reach, summ = text.strip().lower().replace("-", "/").split("/")
            return cls(Reach(reach), Summarization(summ))
        except ValueError:
            raise DataError(f"unknown measure {text!r}; expected e.g. 'degree/log'") from None

    @property
    def exponential(self):
        return self.summarization is not Summarization.LOG

    def __str__(self):
        return f"{self.reach.value}/{self.summarization.value}"


ALL_KINDS = tuple(MeasureKind(r, s) for r in Reach for s in Summarization)


@dataclass(frozen=True)
class ExtendedInterval:
    """Closed interval over the extended reals."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def length(self):
        return interval_length(self)

    def __contains__(self, x):
        return self.lo <= x <= self.hi


REALS = ExtendedInterval(-math.inf, math.inf)


def interval_length(interval):
    """``hi - lo``; +inf as soon as either end is infinite."""
    if math.isinf(interval.lo) or math.isinf(interval.hi):
        return math.inf
    return interval.hi - interval.lo


@dataclass(frozen=True)
class CentralityProfile:
    kind: MeasureKind
    alpha: float
    values: np.ndarray


def _require_degree(g, u):
    k = degree(g, u)
    if k == 0:
        raise DataError(f"node {g.labels[g.index(u)]!r} has degree 0")
    return k


def _distance_sum(dist):
    if not np.all(np.isfinite(dist)):
        raise DataError("graph is disconnected; closeness is undefined")
    total = float(dist.sum())
    if total == 0.0:
        raise DataError("closeness needs at least two nodes")
    return total


def closeness(g, u):
    return 1.0 / _distance_sum(unweighted_distances(g, u))


def weighted_closeness(g, u):
    return 1.0 / _distance_sum(weighted_distances(g, u, 1.0))


def degree_prod(g, u, alpha):
    k = _require_degree(g, u)
    return float(checked_product(checked_pow(k, 1.0 - alpha), checked_pow(strength(g, u), alpha)))


def degree_sum(g, u, alpha):
    _require_degree(g, u)
    return math.fsum(checked_pow(w, alpha) for w in g.neighbors(u).values())


def degree_log(g, u, alpha):
    k = _require_degree(g, u)
    return math.log2(strength(g, u) / k) * alpha + math.log2(k)


def closeness_sum(g, u, alpha):
    dist = weighted_distances(g, u, alpha)
    if np.isinf(dist).any() and is_connected(g):
        raise ComputabilityError(f"path lengths overflowed at alpha={alpha!r}", alpha=alpha)
    total = _distance_sum(dist)
    if math.isinf(total):
        raise ComputabilityError(f"sum of distances overflowed at alpha={alpha!r}", alpha=alpha)
    return float(checked_product(1.0, 1.0 / total, "closeness"))


def closeness_prod(g, u, alpha):
    c, cw = closeness(g, u), weighted_closeness(g, u)
    return float(checked_product(checked_pow(c, 1.0 - alpha), checked_pow(cw, alpha)))


def closeness_log(g, u, alpha):
    c, cw = closeness(g, u), weighted_closeness(g, u)
    return math.log2(cw / c) * alpha + math.log2(c)


def degree_arrays(g):
    """Degrees and strengths as float arrays; every node must have degree >= 1."""
    k = degrees(g).astype(float)
    if g.n and k.min() == 0:
        u = int(np.argmin(k))
        raise DataError(f"node {g.labels[u]!r} has degree 0")
    return k, strengths(g)


def _closeness_from(dist):
    if dist.shape[0] < 2:
        raise DataError("closeness needs at least two nodes")
    if not np.all(np.isfinite(dist)):
        raise DataError("graph is disconnected; closeness is undefined")
    return 1.0 / dist.sum(axis=1)


def closeness_arrays(g):
    """Hop-count and weighted closeness (alpha=1) of every node."""
    return _closeness_from(distance_matrix(g)), _closeness_from(distance_matrix(g, 1.0))


def profile(g, kind, alpha, invert=False, strict=True):
    """Values of one measure for all nodes.

    ``invert`` replaces weights by their reciprocals before computing
    distances; it has no effect on degree measures. With ``strict=False``
    out-of-range powers are kept as 0/inf (or NaN) instead of raising.
    """
    if isinstance(kind, str):
        kind = MeasureKind.parse(kind)
    alpha = float(alpha)
    summ = kind.summarization
    if kind.reach is Reach.DEGREE:
        k, s = degree_arrays(g)
        if summ is Summarization.PROD:
            values = checked_product(checked_powers(k, 1.0 - alpha, strict),
                                     checked_powers(s, alpha, strict), strict=strict)
        elif summ is Summarization.SUM:
            values = np.zeros(g.n)
            powers = checked_powers(g.weights, alpha, strict)
            ends = np.array(g.pairs, dtype=np.int64).reshape(-1, 2)
            with np.errstate(over="ignore", invalid="ignore"):
                np.add.at(values, ends[:, 0], powers)
                np.add.at(values, ends[:, 1], powers)
            if strict and np.isinf(values).any():
                raise ComputabilityError(f"sum of powers overflowed at alpha={alpha!r}", alpha=alpha)
        else:
            values = np.log2(s / k) * alpha + np.log2(k)
    else:
        if invert:
            g = invert_weights(g)
        if summ is Summarization.SUM:
            values = _closeness_sum_all(g, alpha, strict)
        else:
            c, cw = closeness_arrays(g)
            if summ is Summarization.PROD:
                values = checked_product(checked_powers(c, 1.0 - alpha, strict),
                                         checked_powers(cw, alpha, strict), strict=strict)
            else:
                values = np.log2(cw / c) * alpha + np.log2(c)
    return CentralityProfile(kind, alpha, np.asarray(values, dtype=float))


def _closeness_sum_all(g, alpha, strict):
    try:
        dist = distance_matrix(g, alpha)
    except ComputabilityError:
        if strict:
            raise
        return np.full(g.n, np.nan)
    if np.isinf(dist).any() and is_connected(g):
        if strict:
            raise ComputabilityError(f"path lengths overflowed at alpha={alpha!r}", alpha=alpha)
        return np.where(np.isinf(dist).any(axis=1), 0.0, 1.0 / dist.sum(axis=1))
    with np.errstate(over="ignore"):
        return checked_product(1.0, _closeness_from(dist), "closeness", strict)


def exponentiation_bases(g, kind, invert=False):
    """Every value raised to alpha while computing ``kind`` on ``g``."""
    if kind.reach is Reach.DEGREE and kind.summarization is Summarization.PROD:
        k, s = degree_arrays(g)
        return np.concatenate([k, s])
    if kind.summarization is Summarization.SUM:
        # reciprocal weights give the same bound, so inversion is irrelevant here
        return np.asarray(g.weights, dtype=float)
    if kind.reach is Reach.CLOSENESS and kind.summarization is Summarization.PROD:
        c, cw = closeness_arrays(invert_weights(g) if invert else g)
        return np.concatenate([c, cw])
    raise ValueError(f"{kind} has no exponentiation")


def safe_interval(g, kind, invert=False):
    """Range of alpha for which every power stays within [2^-1024, 2^1024].

    With b = max(1/min B, max B) over the exponentiation bases B, this is
    [log_b 2^-1024, log_b 2^1024]. Log measures are unrestricted.
    """
    if isinstance(kind, str):
        kind = MeasureKind.parse(kind)
    if kind.summarization is Summarization.LOG:
        return REALS
    bases = exponentiation_bases(g, kind, invert)
    if bases.size == 0:
        raise DataError(f"{kind} has nothing to exponentiate on an edgeless graph")
    b = max(1.0 / float(bases.min()), float(bases.max()))
    if b == 1.0:
        return REALS
    hi = EXPONENT_LIMIT / math.log2(b)
    return ExtendedInterval(-hi, hi)


def rank_nodes(values, allow_nonfinite=False):
    """Competition ranks (1 = most central; ties share the lowest rank: 1, 1, 3)."""
    if isinstance(values, CentralityProfile):
        values = values.values
    values = np.asarray(values, dtype=float)
    if not allow_nonfinite and not np.all(np.isfinite(values)):
        raise DataError("cannot rank non-finite centrality values")
    ranks = rankdata(-values, method="min", nan_policy="omit")
    if np.isnan(ranks).any():
        return ranks
    return ranks.astype(np.int64)
