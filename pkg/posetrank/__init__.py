"""
Interval-valued ranks for bounded posets and the hierarchies they come from.
"""
from posetrank.core.comparison import ComparisonRecord, PairMode, compare_pair, comparison_matrix
from posetrank.core.intervals import IntInterval, RelationClass, classify
from posetrank.core.poset import BoundingOptions, Poset, build_poset
from posetrank.core.ranks import (
    OrderTag,
    RankAssignment,
    RankTable,
    enumerate_strict_rank_functions,
    standard_interval_rank,
    validate_rank_assignment,
)

__all__ = [
    "BoundingOptions",
    "ComparisonRecord",
    "IntInterval",
    "OrderTag",
    "PairMode",
    "Poset",
    "RankAssignment",
    "RankTable",
    "RelationClass",
    "build_poset",
    "classify",
    "compare_pair",
    "comparison_matrix",
    "enumerate_strict_rank_functions",
    "standard_interval_rank",
    "validate_rank_assignment",
]
