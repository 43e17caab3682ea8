"""
Finite bounded posets built from hierarchy edge data.

An input edge (child, parent) asserts child < parent. The relation is closed transitively, bounded with synthetic
bottom and top elements where the data has no unique minimum or maximum, and reduced back to its covering relation.
All heights are chain cardinalities, so the height of a two-element chain is 2.
"""
import logging
from typing import Callable, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Set, Tuple

import networkx as nx

log = logging.getLogger(__name__)

DEFAULT_CHAIN_CAP = 1_000_000


class CycleDetected(Exception):
    def __init__(self, cycle: List[str]) -> None:
        self.cycle = cycle
        super().__init__("Input relation contains a cycle: {}".format(" -> ".join(cycle)))


class TooSmall(Exception):
    pass


class DuplicateId(Exception):
    pass


class UnknownElement(Exception):
    pass


class NotComparable(Exception):
    pass


class BoundingOptions(NamedTuple):
    bottom_name: str = "_BOT_"
    top_name: str = "_TOP_"
    force_bottom: bool = False
    force_top: bool = False


class ChainSet(NamedTuple):
    chains: List[Tuple[str, ...]]
    count: int
    truncated: bool


class Poset(object):
    """
    An immutable bounded poset.

    The cover graph has an edge a -> b for every cover a ⋖ b, the closure graph an edge for every a < b.
    """

    def __init__(
        self,
        cover_graph: nx.DiGraph,
        closure_graph: nx.DiGraph,
        bottom: str,
        top: str,
        synthetic: FrozenSet[str] = frozenset(),
        labels: Optional[Dict[str, str]] = None,
    ) -> None:
        self._covers = cover_graph
        self._closure = closure_graph
        self._bottom = bottom
        self._top = top
        self._synthetic = synthetic
        self._labels = dict(labels) if labels else {}
        self._elements = sorted(cover_graph.nodes)

        order = list(nx.lexicographical_topological_sort(cover_graph))
        self._down_height: Dict[str, int] = {}
        for element in order:
            below = [self._down_height[lower] for lower in cover_graph.predecessors(element)]
            self._down_height[element] = 1 + max(below, default=0)
        self._up_height: Dict[str, int] = {}
        for element in reversed(order):
            above = [self._up_height[upper] for upper in cover_graph.successors(element)]
            self._up_height[element] = 1 + max(above, default=0)
        self._height = self._down_height[top]

    @property
    def elements(self) -> List[str]:
        return list(self._elements)

    @property
    def cover_edges(self) -> List[Tuple[str, str]]:
        return sorted(self._covers.edges)

    @property
    def cover_graph(self) -> nx.DiGraph:
        return self._covers

    @property
    def bottom(self) -> str:
        return self._bottom

    @property
    def top(self) -> str:
        return self._top

    @property
    def height(self) -> int:
        return self._height

    @property
    def synthetic(self) -> FrozenSet[str]:
        return self._synthetic

    def is_synthetic(self, a: str) -> bool:
        return a in self._synthetic

    def label(self, a: str) -> str:
        self._check(a)
        return self._labels.get(a, a)

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, a: str) -> bool:
        return a in self._covers

    def __repr__(self) -> str:
        return "<Poset: {} elements, height {}>".format(len(self), self.height)

    def _check(self, *elements: str) -> None:
        for a in elements:
            if a not in self._covers:
                raise UnknownElement("No element named '{}'".format(a))

    def leq(self, a: str, b: str) -> bool:
        self._check(a, b)
        return a == b or self._closure.has_edge(a, b)

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def incomparable(self, a: str, b: str) -> bool:
        return not self.comparable(a, b)

    def strict_pairs(self) -> List[Tuple[str, str]]:
        return sorted(self._closure.edges)

    def upper_covers(self, a: str) -> List[str]:
        self._check(a)
        return sorted(self._covers.successors(a))

    def lower_covers(self, a: str) -> List[str]:
        self._check(a)
        return sorted(self._covers.predecessors(a))

    def up_set(self, a: str) -> FrozenSet[str]:
        self._check(a)
        return frozenset(self._closure.successors(a)) | {a}

    def down_set(self, a: str) -> FrozenSet[str]:
        self._check(a)
        return frozenset(self._closure.predecessors(a)) | {a}

    def hourglass(self, a: str) -> FrozenSet[str]:
        return self.up_set(a) | self.down_set(a)

    def order_interval(self, a: str, b: str) -> FrozenSet[str]:
        if not self.leq(a, b):
            raise NotComparable("'{}' is not below '{}'".format(a, b))
        return self.up_set(a) & self.down_set(b)

    def maximal_elements(self, subset: Iterable[str]) -> FrozenSet[str]:
        subset = set(subset)
        self._check(*subset)
        return frozenset(a for a in subset if not any(self.lt(a, b) for b in subset))

    def minimal_elements(self, subset: Iterable[str]) -> FrozenSet[str]:
        subset = set(subset)
        self._check(*subset)
        return frozenset(a for a in subset if not any(self.lt(b, a) for b in subset))

    def up_height(self, a: str) -> int:
        self._check(a)
        return self._up_height[a]

    def down_height(self, a: str) -> int:
        self._check(a)
        return self._down_height[a]

    def centrality(self, a: str) -> int:
        return self.up_height(a) + self.down_height(a) - 1

    def spindle_elements(self) -> FrozenSet[str]:
        return frozenset(a for a in self._elements if self.centrality(a) == self.height)

    def is_graded(self) -> bool:
        return len(self.spindle_elements()) == len(self)

    # Graded and Jordan-Dedekind coincide for bounded posets
    is_jordan_dedekind = is_graded

    def chain_count(self) -> int:
        return self._count_paths(lambda a: self.upper_covers(a))

    def maximal_chains(self, cap: int = DEFAULT_CHAIN_CAP) -> ChainSet:
        return self._chains(lambda a: self.upper_covers(a), cap)

    def spindle_chain_count(self) -> int:
        return self._count_paths(self._spindle_successors())

    def spindle_chains(self, cap: int = DEFAULT_CHAIN_CAP) -> ChainSet:
        return self._chains(self._spindle_successors(), cap)

    def _spindle_successors(self) -> Callable[[str], List[str]]:
        spindle = self.spindle_elements()

        def next_on_spindle(a: str) -> List[str]:
            return [
                b for b in self.upper_covers(a) if b in spindle and self._up_height[b] == self._up_height[a] - 1
            ]

        return next_on_spindle

    def _count_paths(self, successors: Callable[[str], List[str]]) -> int:
        paths: Dict[str, int] = {self._bottom: 1}
        for a in nx.lexicographical_topological_sort(self._covers):
            for b in successors(a):
                paths[b] = paths.get(b, 0) + paths.get(a, 0)
        return paths.get(self._top, 0)

    def _chains(self, successors: Callable[[str], List[str]], cap: int) -> ChainSet:
        """
        Counts bottom-to-top paths exactly by dynamic programming over a topological order, then lists up to `cap`
        of them depth-first in lexicographic order.
        """
        count = self._count_paths(successors)

        chains: List[Tuple[str, ...]] = []
        stack: List[Tuple[str, ...]] = [(self._bottom,)]
        while stack and len(chains) < cap:
            chain = stack.pop()
            if chain[-1] == self._top:
                chains.append(chain)
                continue
            for b in reversed(successors(chain[-1])):
                stack.append(chain + (b,))

        truncated = len(chains) < count
        if truncated:
            log.warning("Chain enumeration truncated at {} of {} chains".format(len(chains), count))
        return ChainSet(chains, count, truncated)


def build_poset(
    edges: Iterable[Tuple[str, str]],
    options: Optional[BoundingOptions] = None,
    isolated: Iterable[str] = (),
    labels: Optional[Dict[str, str]] = None,
) -> Poset:
    """
    Builds a bounded poset from (child, parent) edges.

    :param edges: pairs asserting child < parent; duplicate and transitive pairs are allowed
    :param options: names of the synthetic bounds and whether to add them even when not needed
    :param isolated: ids with no edges at all, placed between the bounds
    :param labels: optional display names per id
    :return: the bounded Poset
    """
    options = options or BoundingOptions()
    edges = list(edges)
    isolated = list(isolated)

    for a in [a for edge in edges for a in edge] + isolated:
        if not isinstance(a, str) or not a:
            raise ValueError("Element ids must be nonempty strings, got {!r}".format(a))

    graph = nx.DiGraph()
    graph.add_nodes_from(isolated)
    graph.add_edges_from(edges)
    if len(edges) > graph.number_of_edges():
        log.warning("Ignored {} duplicate edges".format(len(edges) - graph.number_of_edges()))

    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        raise CycleDetected([u for u, _ in cycle] + [cycle[0][0]])

    synthetic: Set[str] = set()
    minimal = sorted(a for a in graph.nodes if graph.in_degree(a) == 0)
    maximal = sorted(a for a in graph.nodes if graph.out_degree(a) == 0)
    need_bottom = len(minimal) > 1 or (options.force_bottom and graph.number_of_nodes() > 0)
    need_top = len(maximal) > 1 or (options.force_top and graph.number_of_nodes() > 0)

    if need_bottom and need_top and options.bottom_name == options.top_name:
        raise DuplicateId("Synthetic bottom and top share the id '{}'".format(options.bottom_name))
    if need_bottom:
        if options.bottom_name in graph:
            raise DuplicateId("Synthetic bottom id '{}' collides with an input id".format(options.bottom_name))
        graph.add_edges_from((options.bottom_name, a) for a in minimal)
        synthetic.add(options.bottom_name)
        minimal = [options.bottom_name]
    if need_top:
        if options.top_name in graph:
            raise DuplicateId("Synthetic top id '{}' collides with an input id".format(options.top_name))
        graph.add_edges_from((a, options.top_name) for a in maximal)
        synthetic.add(options.top_name)
        maximal = [options.top_name]

    if graph.number_of_nodes() < 2:
        raise TooSmall("A bounded poset needs at least 2 elements, got {}".format(graph.number_of_nodes()))

    log.info("Bounding complete: {} elements, synthetic bounds {}".format(graph.number_of_nodes(), sorted(synthetic)))

    covers = nx.transitive_reduction(graph)
    covers.add_nodes_from(graph.nodes)
    dropped = graph.number_of_edges() - covers.number_of_edges()
    if dropped:
        log.warning("Dropped {} transitive edges".format(dropped))
    closure = nx.transitive_closure_dag(covers)

    return Poset(covers, closure, minimal[0], maximal[0], frozenset(synthetic), labels)
