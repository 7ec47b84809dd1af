"""Useful intervals: the span of alpha over which the log-centrality ranking changes.

Every node's log-centrality is a line in alpha. The ranking only changes
where two non-coincident lines cross, so the useful interval runs from the
leftmost to the rightmost crossing.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .centrality import REALS, ExtendedInterval, Reach, closeness_arrays, degree_arrays, interval_length
from .extrema import Line, find_extrema
from .graph import invert_weights

__all__ = ["Degeneracy", "UsefulInterval", "closeness_lines", "degree_lines",
           "interval_length", "useful_interval", "useful_interval_of"]


class Degeneracy(enum.Enum):
    NONE = "none"
    NO_CHANGE_POINTS = "no_change_points"
    SINGLE_POINT = "single_point"


@dataclass(frozen=True)
class UsefulInterval:
    interval: ExtendedInterval
    degenerate: Degeneracy
    kind: Reach | None = None
    # groups of tags whose lines coincide: nodes tied at every alpha
    ties: tuple = field(default=())
    # tags of the lines crossing at each end
    lo_pair: tuple | None = None
    hi_pair: tuple | None = None

    @property
    def lo(self):
        return self.interval.lo

    @property
    def hi(self):
        return self.interval.hi

    @property
    def length(self):
        return interval_length(self.interval)


def degree_lines(g, log=math.log2):
    """One line per node: slope log(s/k), intercept log(k)."""
    k, s = degree_arrays(g)
    return [Line(log(su / ku), log(ku), tag=g.labels[u])
            for u, (ku, su) in enumerate(zip(k.tolist(), s.tolist()))]


def closeness_lines(g, invert=True, log=math.log2):
    """One line per node: slope log(Cw/C), intercept log(C).

    With ``invert`` the weighted closeness uses reciprocal weights as edge
    lengths (weights measure strength of ties, not distance).
    """
    c, cw = closeness_arrays(invert_weights(g) if invert else g)
    return [Line(log(wu / cu), log(cu), tag=g.labels[u])
            for u, (cu, wu) in enumerate(zip(c.tolist(), cw.tolist()))]


def useful_interval(lines, kind=None):
    """[leftmost crossing, rightmost crossing] of ``lines``.

    Lines with exactly equal (slope, intercept) are merged first; they never
    change places. Without any crossing the interval is the whole real line.
    """
    groups = {}
    for ln in lines:
        groups.setdefault((ln.a, ln.b), []).append(ln.tag)
    ties = tuple(tuple(tags) for tags in groups.values() if len(tags) > 1)
    survivors = [Line(a, b, tag=tags[0]) for (a, b), tags in groups.items()]
    if len(survivors) < 2:
        return UsefulInterval(REALS, Degeneracy.NO_CHANGE_POINTS, kind, ties)
    ext = find_extrema(survivors)
    if not ext.has_intersection:
        return UsefulInterval(REALS, Degeneracy.NO_CHANGE_POINTS, kind, ties)
    degenerate = Degeneracy.SINGLE_POINT if ext.leftmost == ext.rightmost else Degeneracy.NONE
    return UsefulInterval(ExtendedInterval(ext.leftmost, ext.rightmost), degenerate, kind, ties,
                          ext.leftmost_pair, ext.rightmost_pair)


def useful_interval_of(g, reach, invert=True):
    """U_D (reach=DEGREE) or U_C (reach=CLOSENESS) of a graph."""
    if reach is Reach.DEGREE:
        return useful_interval(degree_lines(g), Reach.DEGREE)
    return useful_interval(closeness_lines(g, invert), Reach.CLOSENESS)
