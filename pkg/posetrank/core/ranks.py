"""
Interval-valued ranks of bounded posets.

The standard interval rank of an element a is [h(↑a) - 1, h - h(↓a)]: its top rank and its bottom rank. Ranks are
pointed downward, so the top element has rank [0, 0] and the bottom element [h - 1, h - 1].
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterator, List, Mapping, NamedTuple, Optional, Tuple

import networkx as nx
import numpy as np
from pandas import DataFrame

from .intervals import IntInterval, format_midpoint, lt_strong, lt_weak, proper_subset
from .poset import Poset, UnknownElement

log = logging.getLogger(__name__)

DEFAULT_MAX_ENUM_ELEMENTS = 10

RANK_TABLE_COLUMNS = [
    "element",
    "up_height",
    "down_height",
    "r_top",
    "r_bottom",
    "width",
    "centrality",
    "midpoint",
    "freese",
    "proc_top",
    "proc_bottom",
    "precise",
    "synthetic",
]


class IncompleteAssignment(Exception):
    pass


class PosetTooLarge(Exception):
    pass


class OrderTag(Enum):
    """
    The interval order a rank assignment is meant to be a strict homomorphism into.
    """

    WEAK = "weak"
    WEAK_DUAL = "weak-dual"
    STRONG = "strong"
    STRONG_DUAL = "strong-dual"
    SUBSET = "subset"
    SUPERSET = "superset"


# For a < b, the relation required between R(a) and R(b)
_STRICT_RELATIONS: Dict[OrderTag, Callable[[IntInterval, IntInterval], bool]] = {
    OrderTag.WEAK: lambda x, y: lt_weak(x, y),
    OrderTag.WEAK_DUAL: lambda x, y: lt_weak(y, x),
    OrderTag.STRONG: lambda x, y: lt_strong(x, y),
    OrderTag.STRONG_DUAL: lambda x, y: lt_strong(y, x),
    OrderTag.SUBSET: lambda x, y: proper_subset(x, y),
    OrderTag.SUPERSET: lambda x, y: proper_subset(y, x),
}

# Direction of the lower and upper endpoint functions: +1 strictly isotone, -1 strictly antitone
_ENDPOINT_DIRECTIONS: Dict[OrderTag, Tuple[int, int]] = {
    OrderTag.WEAK: (1, 1),
    OrderTag.WEAK_DUAL: (-1, -1),
    OrderTag.STRONG: (1, 1),
    OrderTag.STRONG_DUAL: (-1, -1),
    OrderTag.SUBSET: (-1, 1),
    OrderTag.SUPERSET: (1, -1),
}


class ElementRank(NamedTuple):
    element: str
    up_height: int
    down_height: int
    r_top: int
    r_bottom: int
    width: int
    centrality: int
    midpoint_doubled: int
    freese: int
    proc_top: int
    proc_bottom: int
    precise: bool
    synthetic: bool

    @property
    def interval(self) -> IntInterval:
        return IntInterval(self.r_top, self.r_bottom)

    @property
    def natural_rank(self) -> int:
        return self.down_height


class RankTable(object):
    """
    Per-element rank statistics for one poset. Iteration follows rank order: (r_top, r_bottom, element).
    """

    def __init__(self, poset: Poset, rows: Mapping[str, ElementRank]) -> None:
        self._poset = poset
        self._rows = dict(rows)
        self._order = sorted(self._rows, key=self.rank_key)

    @property
    def poset(self) -> Poset:
        return self._poset

    @property
    def height(self) -> int:
        return self._poset.height

    def rank_key(self, a: str) -> Tuple[int, int, str]:
        row = self[a]
        return row.r_top, row.r_bottom, a

    def __getitem__(self, a: str) -> ElementRank:
        if a not in self._rows:
            raise UnknownElement("No element named '{}' in rank table".format(a))
        return self._rows[a]

    def __contains__(self, a: str) -> bool:
        return a in self._rows

    def __iter__(self) -> Iterator[ElementRank]:
        return (self._rows[a] for a in self._order)

    def __len__(self) -> int:
        return len(self._rows)

    def elements(self) -> List[str]:
        return list(self._order)

    def interval(self, a: str) -> IntInterval:
        return self[a].interval

    def to_dataframe(self) -> DataFrame:
        records = [
            {
                "element": row.element,
                "up_height": row.up_height,
                "down_height": row.down_height,
                "r_top": row.r_top,
                "r_bottom": row.r_bottom,
                "width": row.width,
                "centrality": row.centrality,
                "midpoint": format_midpoint(row.midpoint_doubled),
                "freese": row.freese,
                "proc_top": row.proc_top,
                "proc_bottom": row.proc_bottom,
                "precise": row.precise,
                "synthetic": row.synthetic,
            }
            for row in self
        ]
        return DataFrame.from_records(records, columns=RANK_TABLE_COLUMNS)


@dataclass(frozen=True)
class RankAssignment:
    intervals: Mapping[str, IntInterval]
    order_tag: OrderTag = OrderTag.WEAK_DUAL

    def __getitem__(self, a: str) -> IntInterval:
        return self.intervals[a]


class Violation(NamedTuple):
    lower: str
    upper: str
    kind: str
    lower_interval: IntInterval
    upper_interval: IntInterval

    def __str__(self) -> str:
        return "{} < {}: {} violated by {} vs {}".format(
            self.lower, self.upper, self.kind, self.lower_interval, self.upper_interval
        )


@dataclass(frozen=True)
class ValidationReport:
    order_tag: OrderTag
    strict: bool
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


def freese_rank(p: Poset, a: str) -> int:
    return p.height + p.down_height(a) - p.up_height(a)


def procedural_rank_top(p: Poset) -> Dict[str, int]:
    """
    Peels off the maximal elements layer by layer; an element's rank is the index of the layer it leaves in.
    """
    return _peel(p.cover_graph.reverse(copy=False))


def procedural_rank_bottom(p: Poset) -> Dict[str, int]:
    return _peel(p.cover_graph)


def _peel(graph: nx.DiGraph) -> Dict[str, int]:
    ranks = {}
    for layer, generation in enumerate(nx.topological_generations(graph)):
        log.debug("Peeled layer {}: {}".format(layer, sorted(generation)))
        for a in generation:
            ranks[a] = layer
    return ranks


def procedural_interval_rank(p: Poset) -> RankAssignment:
    top = procedural_rank_top(p)
    bottom = procedural_rank_bottom(p)
    return RankAssignment(
        {a: IntInterval(top[a], p.height - bottom[a] - 1) for a in p.elements}, OrderTag.WEAK_DUAL
    )


def standard_interval_rank(p: Poset) -> RankTable:
    log.info("Computing standard interval rank for {}".format(p))
    h = p.height
    proc_top = procedural_rank_top(p)
    proc_bottom = procedural_rank_bottom(p)

    rows = {}
    for a in p.elements:
        up, down = p.up_height(a), p.down_height(a)
        r_top, r_bottom = up - 1, h - down
        rows[a] = ElementRank(
            element=a,
            up_height=up,
            down_height=down,
            r_top=r_top,
            r_bottom=r_bottom,
            width=r_bottom - r_top,
            centrality=up + down - 1,
            midpoint_doubled=r_top + r_bottom,
            freese=freese_rank(p, a),
            proc_top=proc_top[a],
            proc_bottom=proc_bottom[a],
            precise=r_top == r_bottom,
            synthetic=p.is_synthetic(a),
        )
    return RankTable(p, rows)


def standard_assignment(rt: RankTable) -> RankAssignment:
    return RankAssignment({row.element: row.interval for row in rt}, OrderTag.WEAK_DUAL)


def classical_rank(p: Poset) -> Optional[Dict[str, int]]:
    """
    The classical rank function, which exists only for graded posets. There it coincides with both top and bottom
    rank.
    """
    if not p.is_graded():
        return None
    return {a: p.up_height(a) - 1 for a in p.elements}


def width_histogram(rt: RankTable) -> Dict[int, int]:
    counts = np.bincount([row.width for row in rt])
    return {width: int(count) for width, count in enumerate(counts) if count}


def _check_pair(
    order_tag: OrderTag, strict: bool, a: str, b: str, x: IntInterval, y: IntInterval
) -> Iterator[Violation]:
    if not _STRICT_RELATIONS[order_tag](x, y):
        yield Violation(a, b, "relation", x, y)
    if strict:
        lower_direction, upper_direction = _ENDPOINT_DIRECTIONS[order_tag]
        if (y.lo - x.lo) * lower_direction <= 0:
            yield Violation(a, b, "lower_endpoint", x, y)
        if (y.hi - x.hi) * upper_direction <= 0:
            yield Violation(a, b, "upper_endpoint", x, y)


def validate_rank_assignment(p: Poset, ra: RankAssignment, strict: bool = False) -> ValidationReport:
    """
    Checks an interval assignment against the definition of an interval rank function for its order tag.

    Every comparable pair a < b is checked and every failure is reported. With `strict`, both endpoint functions must
    also be strictly monotonic in the direction the order tag prescribes.
    """
    missing = [a for a in p.elements if a not in ra.intervals]
    if missing:
        raise IncompleteAssignment("No interval given for {}".format(", ".join(missing)))
    unknown = sorted(a for a in ra.intervals if a not in p)
    if unknown:
        raise UnknownElement("Assignment names unknown elements {}".format(", ".join(unknown)))

    violations = []
    for a, b in p.strict_pairs():
        violations.extend(_check_pair(ra.order_tag, strict, a, b, ra[a], ra[b]))
    log.info("Validated {} assignment: {} violations".format(ra.order_tag.value, len(violations)))
    return ValidationReport(ra.order_tag, strict, violations)


def enumerate_strict_rank_functions(
    p: Poset, order_tag: OrderTag = OrderTag.WEAK_DUAL, max_elements: int = DEFAULT_MAX_ENUM_ELEMENTS
) -> List[RankAssignment]:
    """
    Lists every strict interval rank function for `order_tag` whose intervals lie within [0, h - 1].

    Elements are assigned bottom-up in topological order and each candidate is only checked against the lower covers
    already assigned: all six strict relations are transitive, so covers are enough.
    """
    if len(p) > max_elements:
        raise PosetTooLarge("Enumeration is limited to {} elements, poset has {}".format(max_elements, len(p)))

    candidates = [IntInterval(lo, hi) for lo in range(p.height) for hi in range(lo, p.height)]
    order = list(nx.lexicographical_topological_sort(p.cover_graph))
    lower_covers = {a: p.lower_covers(a) for a in order}
    results: List[RankAssignment] = []
    assigned: Dict[str, IntInterval] = {}

    def extend(depth: int) -> None:
        if depth == len(order):
            results.append(RankAssignment(dict(assigned), order_tag))
            return
        b = order[depth]
        for y in candidates:
            if any(True for a in lower_covers[b] for _ in _check_pair(order_tag, True, a, b, assigned[a], y)):
                continue
            assigned[b] = y
            extend(depth + 1)
            del assigned[b]

    extend(0)
    log.info("Enumerated {} strict {} rank functions".format(len(results), order_tag.value))
    return results


class PosetStats(NamedTuple):
    height: int
    element_count: int
    cover_count: int
    chain_count: int
    truncated: bool
    spindle: List[str]
    spindle_chain_count: int
    graded: bool
    width_histogram: Dict[int, int]
    chains: Optional[List[Tuple[str, ...]]] = None


def poset_stats(rt: RankTable, chain_cap: int, list_chains: bool = False) -> PosetStats:
    p = rt.poset
    chain_set = p.maximal_chains(chain_cap) if list_chains else None
    count = p.chain_count()
    return PosetStats(
        height=p.height,
        element_count=len(p),
        cover_count=len(p.cover_edges),
        chain_count=count,
        truncated=count > chain_cap,
        spindle=sorted(a for a in rt.elements() if rt[a].precise),
        spindle_chain_count=p.spindle_chain_count(),
        graded=p.is_graded(),
        width_histogram=width_histogram(rt),
        chains=chain_set.chains if chain_set else None,
    )
