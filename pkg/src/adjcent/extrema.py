"""Leftmost and rightmost crossing points of a set of unbounded lines.

A line ``y = a*x + b`` is the pair ``(a, b)``. The leftmost crossing is found
in O(n log n) without enumerating pairs:

1. Any two lines of different slope cross at some ``r``; if none exist the
   set is pairwise parallel and has no crossings at all.
2. The leftmost crossing lies left of ``r + 1``. Sort the lines by their
   height at ``r + 1`` (ties: ascending slope).
3. Sweep in that order. A new line can only improve the running minimum by
   crossing an earlier line of smaller slope, and among those only the one
   with the largest slope needs checking. That line comes from a predecessor
   query on the slopes seen so far.

The rightmost crossing of ``{(a, b)}`` is minus the leftmost crossing of
``{(-a, b)}``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .errors import DataError


@dataclass(frozen=True)
class Line:
    a: float
    b: float
    tag: Any = None

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DataError(f"line ({self.a}, {self.b}) is not finite")

    def __call__(self, x):
        return self.a * x + self.b


class Crossing(enum.Enum):
    PARALLEL = "parallel"
    COINCIDENT = "coincident"


@dataclass(frozen=True)
class ExtremaResult:
    leftmost: float
    rightmost: float
    has_intersection: bool
    # tags of the two lines crossing at each extremum
    leftmost_pair: tuple | None = None
    rightmost_pair: tuple | None = None


NO_INTERSECTION = ExtremaResult(-math.inf, math.inf, False)


def pairwise_intersection(l1, l2, tol=0.0):
    """Abscissa where two lines cross, or a Crossing for (near-)equal slopes."""
    if abs(l1.a - l2.a) <= tol:
        return Crossing.COINCIDENT if l1.b == l2.b else Crossing.PARALLEL
    return (l2.b - l1.b) / (l1.a - l2.a)


def _as_arrays(lines):
    if isinstance(lines, tuple) and len(lines) == 2 and isinstance(lines[0], np.ndarray):
        a, b = lines
        a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    else:
        n = len(lines)
        a = np.fromiter((ln.a for ln in lines), dtype=float, count=n)
        b = np.fromiter((ln.b for ln in lines), dtype=float, count=n)
    if a.shape != b.shape or a.ndim != 1:
        raise DataError("slopes and intercepts must be 1-d arrays of equal length")
    if a.size == 0:
        raise DataError("at least one line is required")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise DataError("lines must have finite slopes and intercepts")
    return a, b


def snap_slopes(a, tol):
    """Merge slopes into classes and give each line its class's smallest slope.

    Sorted slopes closer than ``tol`` to their neighbour share a class, so a
    class may span more than ``tol``. Lines of one class count as parallel.
    """
    a = np.asarray(a, dtype=float)
    if tol <= 0 or a.size < 2:
        return a
    order = np.argsort(a, kind="stable")
    sa = a[order]
    starts = np.concatenate([[True], np.diff(sa) > tol])
    snapped = np.empty_like(a)
    snapped[order] = sa[starts][np.cumsum(starts) - 1]
    return snapped


def _prepare(lines, tol):
    a, b = _as_arrays(lines)
    if tol < 0:
        raise DataError("tol must be >= 0")
    return snap_slopes(a, tol), b


def _slope_ranks(a, b):
    """Dense ranks of the slopes (equal slopes share a rank) and their count.

    Also rejects coincident lines, which share a position after the sort.
    """
    order = np.lexsort((b, a))
    sa, sb = a[order], b[order]
    step = sa[1:] != sa[:-1]
    dup = np.flatnonzero(~step & (sb[1:] == sb[:-1]))
    if dup.size:
        i, j = order[dup[0]], order[dup[0] + 1]
        raise DataError(f"lines {i} and {j} are coincident ({a[i]}, {b[i]})")
    rank = np.empty(a.size, dtype=np.int64)
    rank[order] = np.concatenate([[0], np.cumsum(step)])
    slopes = sa[np.concatenate([[True], step])]
    return rank, slopes


class RankIndex:
    """Ordered set over the integers ``0..size-1`` with predecessor queries.

    Two levels of bitmasks: one Python int per bucket of ranks, plus one int
    flagging the non-empty buckets. Insert and predecessor cost a constant
    number of big-int operations on masks of about sqrt(size) bits.
    """

    __slots__ = ("width", "buckets", "summary", "bit", "below")

    def __init__(self, size):
        self.width = max(64, math.isqrt(max(size, 1)) + 1)
        self.buckets = [0] * (size // self.width + 1)
        self.summary = 0
        span = max(self.width, len(self.buckets)) + 1
        self.bit = [1 << x for x in range(span)]
        # below[x] has bits 0..x-1 set
        self.below = [(1 << x) - 1 for x in range(span)]

    def add(self, k):
        hi, lo = divmod(k, self.width)
        if not self.buckets[hi]:
            self.summary |= self.bit[hi]
        self.buckets[hi] |= self.bit[lo]

    def __contains__(self, k):
        hi, lo = divmod(k, self.width)
        return bool(self.buckets[hi] & self.bit[lo])

    def predecessor(self, k):
        """Largest member strictly below ``k``, or -1."""
        hi, lo = divmod(k, self.width)
        mask = self.buckets[hi] & self.below[lo]
        if mask:
            return hi * self.width + mask.bit_length() - 1
        mask = self.summary & self.below[hi]
        if not mask:
            return -1
        hi = mask.bit_length() - 1
        return hi * self.width + self.buckets[hi].bit_length() - 1


_SPLIT = 134217729.0  # 2**27 + 1


def _split(x):
    c = _SPLIT * x
    hi = c - (c - x)
    return hi, x - hi


def _height_order(a, b, x):
    """Order of the lines by height at ``x``, ties broken by ascending slope.

    Heights are kept as unevaluated sums ``hi + lo`` (an exact product and an
    exact sum, about 106 significant bits), so lines a few ulps apart in slope
    still sort correctly.
    """
    if not math.isfinite(x):
        # the crossing itself overflowed; heights far right order by slope
        return np.lexsort((b, a))
    with np.errstate(over="ignore", invalid="ignore"):
        p = a * x
        ah, al = _split(a)
        xh, xl = _split(x)
        e = ((ah * xh - p) + ah * xl + al * xh) + al * xl
        s = p + b
        t = s - p
        e = e + (p - (s - t)) + (b - t)
        hi = s + e
        lo = e - (hi - s)
    if not (np.all(np.isfinite(hi)) and np.all(np.isfinite(lo))):
        return np.lexsort((a, a * x + b))
    return np.lexsort((a, lo, hi))


def _leftmost(a, b, rank, slopes):
    """Core sweep. ``rank``/``slopes`` come from _slope_ranks(a, b).

    Returns ``(x, i, j)`` with i, j the crossing lines, or ``(-inf, -1, -1)``.
    """
    # any pair of distinct slopes gives a crossing r; none means all parallel.
    # The steepest and flattest lines keep r moderate: a nearly parallel pair
    # would put r far out, where the heights below can no longer tell apart
    # the lines that actually cross first.
    lo, hi = int(np.argmin(a)), int(np.argmax(a))
    if a[lo] == a[hi]:
        return -math.inf, -1, -1
    x_right = (b[lo] - b[hi]) / (a[hi] - a[lo]) + 1.0
    order = _height_order(a, b, x_right)
    index = RankIndex(slopes.size)
    width, buckets, bit, below = index.width, index.buckets, index.bit, index.below
    k = rank[order]
    columns = (order.tolist(), a[order].tolist(), b[order].tolist(),
               (k // width).tolist(), (k % width).tolist(), k.tolist())

    slope_of = slopes.tolist()
    # per slope rank, the smallest intercept stored so far and its line
    best_b = [math.inf] * slopes.size
    best_i = [-1] * slopes.size
    summary = 0
    x_min, pair = math.inf, (-1, -1)
    for i, ai, bi, kh, kl, ki in zip(*columns):
        # largest stored slope rank below ki (RankIndex.predecessor, inlined)
        mask = buckets[kh] & below[kl]
        if mask:
            p = kh * width + mask.bit_length() - 1
        else:
            mask = summary & below[kh]
            if mask:
                h = mask.bit_length() - 1
                p = h * width + buckets[h].bit_length() - 1
            else:
                p = -1
        if p >= 0:
            t = (best_b[p] - bi) / (ai - slope_of[p])
            if t < x_min:
                x_min, pair = t, (best_i[p], i)
        if bi < best_b[ki]:
            if best_b[ki] == math.inf:
                if not buckets[kh]:
                    summary |= bit[kh]
                buckets[kh] |= bit[kl]
            best_b[ki] = bi
            best_i[ki] = i
    if pair[0] < 0:
        return -math.inf, -1, -1
    return x_min, pair[0], pair[1]


def _tags(lines, i, j):
    if isinstance(lines, tuple):
        return (i, j)
    return (lines[i].tag, lines[j].tag)


def leftmost_intersection(lines, tol=0.0):
    """Smallest abscissa at which two of ``lines`` cross; -inf if none do.

    ``lines`` is a sequence of Line or a ``(slopes, intercepts)`` tuple of
    arrays. With ``tol > 0`` slopes are first merged by snap_slopes.
    Coincident lines are rejected.
    """
    a, b = _prepare(lines, tol)
    rank, slopes = _slope_ranks(a, b)
    return _leftmost(a, b, rank, slopes)[0]


def rightmost_intersection(lines, tol=0.0):
    """Largest crossing abscissa; +inf if no two lines cross."""
    a, b = _prepare(lines, tol)
    rank, slopes = _slope_ranks(a, b)
    return -_leftmost(-a, b, slopes.size - 1 - rank, -slopes[::-1])[0]


def find_extrema(lines: Sequence[Line] | tuple, tol=0.0) -> ExtremaResult:
    """Both extrema together with the tags of the lines that produce them."""
    a, b = _prepare(lines, tol)
    rank, slopes = _slope_ranks(a, b)
    left, i, j = _leftmost(a, b, rank, slopes)
    right, k, m = _leftmost(-a, b, slopes.size - 1 - rank, -slopes[::-1])
    if i < 0 or k < 0:
        return NO_INTERSECTION
    return ExtremaResult(left, -right, True, _tags(lines, i, j), _tags(lines, k, m))


def brute_force_extrema(lines, tol=0.0):
    """Reference O(n^2) scan over every pair of lines."""
    a, b = _prepare(lines, tol)
    n = a.size
    best_lo, best_hi = math.inf, -math.inf
    lo_pair = hi_pair = None
    for i in range(n - 1):
        da = a[i] - a[i + 1:]
        db = b[i + 1:] - b[i]
        parallel = da == 0
        if np.any(parallel & (db == 0)):
            j = i + 1 + int(np.flatnonzero(parallel & (db == 0))[0])
            raise DataError(f"lines {i} and {j} are coincident ({a[i]}, {b[i]})")
        if parallel.all():
            continue
        with np.errstate(divide="ignore", invalid="ignore"):
            x = np.where(parallel, np.nan, db / np.where(parallel, 1.0, da))
        lo, hi = int(np.nanargmin(x)), int(np.nanargmax(x))
        if x[lo] < best_lo:
            best_lo, lo_pair = float(x[lo]), (i, i + 1 + lo)
        if x[hi] > best_hi:
            best_hi, hi_pair = float(x[hi]), (i, i + 1 + hi)
    if lo_pair is None:
        return NO_INTERSECTION
    return ExtremaResult(best_lo, best_hi, True, _tags(lines, *lo_pair), _tags(lines, *hi_pair))
