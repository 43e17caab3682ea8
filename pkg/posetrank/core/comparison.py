"""
Pairwise comparison of standard rank intervals.

For an ordered pair (a, b) the difference interval is R⁺(b) - R⁺(a) and the separation is its absolute value: the
range of distances between any rank a could take and any rank b could take.
"""
import logging
from collections import defaultdict
from enum import Enum
from typing import Dict, List, NamedTuple

from .intervals import IntInterval, RelationClass, classify
from .ranks import RankTable

log = logging.getLogger(__name__)


class PairMode(Enum):
    ALL = "all"
    COVERS = "covers"


class ComparisonRecord(NamedTuple):
    a: str
    b: str
    relation: RelationClass
    alpha: IntInterval
    sep: IntInterval
    sep_width: int
    a_group: str
    b_group: str


def rank_groups(rt: RankTable) -> Dict[str, str]:
    """
    Maps every element to the comma-joined ids of all elements sharing its exact rank interval, itself included.
    """
    members: Dict[IntInterval, List[str]] = defaultdict(list)
    for row in rt:
        members[row.interval].append(row.element)
    return {element: ",".join(group) for group in members.values() for element in group}


def _record(rt: RankTable, a: str, b: str, groups: Dict[str, str]) -> ComparisonRecord:
    x, y = rt.interval(a), rt.interval(b)
    alpha = y - x
    sep = abs(alpha)
    return ComparisonRecord(a, b, classify(x, y), alpha, sep, sep.width, groups[a], groups[b])


def compare_pair(rt: RankTable, a: str, b: str) -> ComparisonRecord:
    return _record(rt, a, b, rank_groups(rt))


def comparison_matrix(rt: RankTable, pairs: PairMode = PairMode.ALL) -> List[ComparisonRecord]:
    """
    :param pairs: ALL compares every unordered pair once, taking elements in rank order and putting the earlier one
        first; COVERS compares every cover a ⋖ b as (b, a), upper element first
    """
    groups = rank_groups(rt)
    if pairs is PairMode.ALL:
        order = rt.elements()
        records = [_record(rt, a, b, groups) for i, a in enumerate(order) for b in order[i + 1 :]]
    else:
        covers = sorted(rt.poset.cover_edges, key=lambda edge: (rt.rank_key(edge[1]), rt.rank_key(edge[0])))
        records = [_record(rt, upper, lower, groups) for lower, upper in covers]
    log.info("Compared {} pairs ({})".format(len(records), pairs.value))
    return records
