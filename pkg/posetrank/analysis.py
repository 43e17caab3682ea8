import logging
from typing import List, Tuple

from posetrank.core.comparison import ComparisonRecord, PairMode, comparison_matrix
from posetrank.core.hierarchy_reader import ParseError
from posetrank.core.pipeline import PipelineComponent
from posetrank.core.poset import Poset
from posetrank.core.ranks import (
    OrderTag,
    PosetStats,
    RankAssignment,
    RankTable,
    ValidationReport,
    enumerate_strict_rank_functions,
    poset_stats,
    standard_interval_rank,
    validate_rank_assignment,
)
from posetrank.core.registry import Registry
from posetrank.core.report_writer import read_assignment_json

log = logging.getLogger(__name__)


class ChainCapExceeded(Exception):
    pass


class RankComputer(PipelineComponent):
    def run(self, registry: Registry, poset: Poset) -> Tuple[Poset, RankTable]:
        return poset, standard_interval_rank(poset)


class Comparator(PipelineComponent):
    def __init__(self, pairs: PairMode = PairMode.ALL) -> None:
        self.pairs = pairs

    def run(self, registry: Registry, poset: Poset, rt: RankTable) -> Tuple[Poset, RankTable, List[ComparisonRecord]]:
        return poset, rt, comparison_matrix(rt, self.pairs)


class AssignmentChecker(PipelineComponent):
    """
    Reads a user-supplied rank assignment and validates it against the poset.
    """

    def __init__(self, ranks_path: str, order_tag: OrderTag = OrderTag.WEAK_DUAL, strict: bool = False) -> None:
        self.ranks_path = ranks_path
        self.order_tag = order_tag
        self.strict = strict

    def run(self, registry: Registry, poset: Poset, rt: RankTable) -> Tuple[Poset, RankTable, ValidationReport]:
        log.info("Reading rank assignment from {}".format(self.ranks_path))
        try:
            with open(self.ranks_path, "r", encoding="utf-8") as f:
                text = f.read()
        except UnicodeDecodeError as ex:
            raise ParseError("File is not valid UTF-8 ({})".format(ex.reason), self.ranks_path) from ex
        assignment = read_assignment_json(text, self.order_tag, self.ranks_path)
        report = validate_rank_assignment(poset, assignment, self.strict)
        for violation in report.violations:
            log.debug("Violation: {}".format(violation))
        return poset, rt, report


class RankEnumerator(PipelineComponent):
    def __init__(self, order_tag: OrderTag = OrderTag.WEAK_DUAL) -> None:
        self.order_tag = order_tag

    def run(self, registry: Registry, poset: Poset, rt: RankTable) -> Tuple[Poset, RankTable, List[RankAssignment]]:
        max_elements = registry.get("max-enum-elements")
        return poset, rt, enumerate_strict_rank_functions(poset, self.order_tag, max_elements)


class StatsCollector(PipelineComponent):
    def __init__(self, list_chains: bool = False) -> None:
        self.list_chains = list_chains

    def run(self, registry: Registry, poset: Poset, rt: RankTable) -> Tuple[Poset, RankTable, PosetStats]:
        chain_cap: int = registry.get("chain-cap")
        stats = poset_stats(rt, chain_cap, self.list_chains)
        if stats.truncated and registry.get("require-full-enumeration"):
            raise ChainCapExceeded(
                "Poset has {} maximal chains, more than the cap of {}".format(stats.chain_count, chain_cap)
            )
        return poset, rt, stats
