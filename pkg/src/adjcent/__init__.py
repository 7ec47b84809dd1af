"""Adjustable node centrality on weighted graphs and the useful range of its weighting parameter."""
from .centrality import (ALL_KINDS, REALS, CentralityProfile, ExtendedInterval, MeasureKind, Reach,
                         Summarization, closeness, closeness_log, closeness_prod, closeness_sum,
                         degree_log, degree_prod, degree_sum, interval_length, profile, rank_nodes,
                         safe_interval, weighted_closeness)
from .errors import ComputabilityError, DataError
from .extrema import (ExtremaResult, Line, brute_force_extrema, find_extrema,
                      leftmost_intersection, pairwise_intersection, rightmost_intersection)
from .generators import ModelConfig, er_normal, replicate_seed, rewire, wrg
from .graph import (WeightedGraph, degree, emit_edge_list, invert_weights, load_edge_list,
                    read_edge_list, strength, symmetrize_directed, unweighted_distances,
                    validate, weighted_distances)
from .intervals import UsefulInterval, closeness_lines, degree_lines, useful_interval, useful_interval_of

__version__ = "0.1.0"
