import logging
from enum import Enum
from typing import Iterator, Optional, Tuple

from posetrank.analysis import AssignmentChecker, Comparator, RankComputer, RankEnumerator, StatsCollector
from posetrank.core.comparison import PairMode
from posetrank.core.pipeline import PipelineComponent, RankPipeline
from posetrank.core.poset import DEFAULT_CHAIN_CAP, BoundingOptions
from posetrank.core.ranks import DEFAULT_MAX_ENUM_ELEMENTS, OrderTag
from posetrank.core.registry import Registry
from posetrank.emit import (
    AssignmentWriter,
    ComparisonWriter,
    LayoutWriter,
    RankTableWriter,
    StatsWriter,
    ValidationWriter,
)
from posetrank.ingest import HierarchyReader, PosetBuilder

log = logging.getLogger(__name__)


class Command(Enum):
    RANK = "rank"
    COMPARE = "compare"
    LAYOUT = "layout"
    CHECK = "check"
    ENUMERATE = "enumerate"
    STATS = "stats"


class PosetRankService:
    def __init__(
        self,
        bounding_options: Optional[BoundingOptions] = None,
        chain_cap: int = DEFAULT_CHAIN_CAP,
        max_enum_elements: int = DEFAULT_MAX_ENUM_ELEMENTS,
        require_full_enumeration: bool = False,
    ) -> None:
        """
        :param bounding_options: names of the synthetic bounds and whether to always add them
        :param chain_cap: most maximal chains ever listed explicitly
        :param max_enum_elements: largest poset for which strict rank functions are enumerated
        :param require_full_enumeration: fail instead of truncating when a poset has more than chain_cap chains
        """
        self.registry = Registry()
        self.registry.register("bounding-options", bounding_options or BoundingOptions())
        self.registry.register("chain-cap", chain_cap)
        self.registry.register("max-enum-elements", max_enum_elements)
        self.registry.register("require-full-enumeration", require_full_enumeration)

    def _get_components(
        self,
        command: Command,
        output_format: str,
        pairs: PairMode = PairMode.ALL,
        grouped: bool = False,
        order_tag: OrderTag = OrderTag.WEAK_DUAL,
        ranks_path: Optional[str] = None,
        strict: bool = False,
        list_chains: bool = False,
    ) -> Iterator[PipelineComponent]:
        yield HierarchyReader()
        yield PosetBuilder()
        yield RankComputer()
        if command is Command.RANK:
            yield RankTableWriter(output_format)
        elif command is Command.COMPARE:
            yield Comparator(pairs)
            yield ComparisonWriter(output_format, grouped)
        elif command is Command.LAYOUT:
            yield LayoutWriter(output_format)
        elif command is Command.CHECK:
            if ranks_path is None:
                raise ValueError("The check command needs a rank assignment file")
            yield AssignmentChecker(ranks_path, order_tag, strict)
            yield ValidationWriter(output_format)
        elif command is Command.ENUMERATE:
            yield RankEnumerator(order_tag)
            yield AssignmentWriter(output_format, order_tag)
        elif command is Command.STATS:
            yield StatsCollector(list_chains)
            yield StatsWriter(output_format)
        else:
            raise ValueError("Unknown command {}".format(command))

    def run_pipeline(
        self, command: Command, input_path: str, input_format: str = "auto", output_format: str = "json", **options
    ) -> Tuple[str, bool]:
        """
        Runs one command over one hierarchy file.

        :param options: per-command settings passed on to the components (pairs, grouped, order_tag, ranks_path,
            strict, list_chains)
        :return: the report text and whether the command succeeded; only `check` can report False
        """
        log.info("Configuring {} pipeline (output {})".format(command.value, output_format))
        pipeline = RankPipeline(self.registry, *self._get_components(command, output_format, **options))
        text, ok = pipeline.run((input_path, input_format))
        return text, ok
