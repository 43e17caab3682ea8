"""
Final pipeline stages: each turns the analysis result into report text.

Every writer returns (text, ok). `ok` is False only for a rank assignment that failed validation.
"""
import logging
from typing import List, Tuple

from posetrank.core.comparison import ComparisonRecord
from posetrank.core.pipeline import PipelineComponent
from posetrank.core.poset import Poset
from posetrank.core.ranks import OrderTag, PosetStats, RankAssignment, RankTable, ValidationReport
from posetrank.core.registry import Registry
from posetrank.core.report_writer import (
    write_assignments_json,
    write_assignments_text,
    write_comparison_csv,
    write_comparison_text,
    write_layout_dot,
    write_rank_csv,
    write_rank_text,
    write_report_json,
    write_stats,
    write_validation_report,
)

log = logging.getLogger(__name__)


class ReportWriter(PipelineComponent):
    formats: Tuple[str, ...] = ()

    def __init__(self, fmt: str) -> None:
        if fmt not in self.formats:
            raise ValueError("{} cannot write '{}' output".format(self, fmt))
        self.fmt = fmt


class RankTableWriter(ReportWriter):
    formats = ("csv", "json", "text")

    def run(self, registry: Registry, poset: Poset, rt: RankTable) -> Tuple[str, bool]:
        if self.fmt == "csv":
            return write_rank_csv(rt), True
        if self.fmt == "text":
            return write_rank_text(rt), True
        return write_report_json(poset, rt, []), True


class ComparisonWriter(ReportWriter):
    formats = ("csv", "json", "text")

    def __init__(self, fmt: str, grouped: bool = False) -> None:
        super().__init__(fmt)
        self.grouped = grouped

    def run(
        self, registry: Registry, poset: Poset, rt: RankTable, records: List[ComparisonRecord]
    ) -> Tuple[str, bool]:
        if self.fmt == "csv":
            return write_comparison_csv(records, self.grouped), True
        if self.fmt == "text":
            return write_comparison_text(records), True
        return write_report_json(poset, rt, records), True


class LayoutWriter(ReportWriter):
    formats = ("dot",)

    def run(self, registry: Registry, poset: Poset, rt: RankTable) -> Tuple[str, bool]:
        return write_layout_dot(poset, rt), True


class ValidationWriter(ReportWriter):
    formats = ("text", "json")

    def run(self, registry: Registry, poset: Poset, rt: RankTable, report: ValidationReport) -> Tuple[str, bool]:
        if not report.valid:
            log.warning("Rank assignment has {} violations".format(len(report.violations)))
        return write_validation_report(report, self.fmt), report.valid


class AssignmentWriter(ReportWriter):
    formats = ("json", "text")

    def __init__(self, fmt: str, order_tag: OrderTag) -> None:
        super().__init__(fmt)
        self.order_tag = order_tag

    def run(
        self, registry: Registry, poset: Poset, rt: RankTable, assignments: List[RankAssignment]
    ) -> Tuple[str, bool]:
        elements = rt.elements()
        if self.fmt == "json":
            return write_assignments_json(assignments, self.order_tag, elements), True
        return write_assignments_text(assignments, self.order_tag, elements), True


class StatsWriter(ReportWriter):
    formats = ("text", "json")

    def run(self, registry: Registry, poset: Poset, rt: RankTable, stats: PosetStats) -> Tuple[str, bool]:
        return write_stats(stats, self.fmt), True
