"""
Serialisation of rank tables, comparisons, layouts, assignments and statistics.

Every writer returns text with LF line endings and a fixed ordering, so the same input always gives the same bytes.
"""
import json
import logging
from collections import defaultdict
from fractions import Fraction
from io import StringIO
from typing import Any, Dict, List, NamedTuple, Sequence

import pandas as pd

from .comparison import ComparisonRecord, PairMode, comparison_matrix
from .hierarchy_reader import ParseError
from .intervals import IntInterval, MalformedInterval, format_midpoint
from .poset import Poset
from .ranks import OrderTag, PosetStats, RankAssignment, RankTable, ValidationReport

log = logging.getLogger(__name__)

RANK_CSV_COLUMNS = [
    "element",
    "up_height",
    "down_height",
    "r_top",
    "r_bottom",
    "width",
    "centrality",
    "midpoint",
    "freese",
]

COMPARISON_CSV_COLUMNS = ["a", "b", "relation", "alpha_lo", "alpha_hi", "sep_lo", "sep_hi", "sep_width"]


def _dump(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _pair(x: IntInterval) -> List[int]:
    return [x.lo, x.hi]


def write_rank_csv(rt: RankTable) -> str:
    return rt.to_dataframe()[RANK_CSV_COLUMNS].to_csv(index=False, lineterminator="\n")


def write_rank_text(rt: RankTable) -> str:
    return rt.to_dataframe().to_string(index=False) + "\n"


def read_rank_csv(text: str) -> pd.DataFrame:
    """
    Reads a rank CSV back into a frame indexed by element. Midpoints stay text so they compare exactly.
    """
    frame = pd.read_csv(StringIO(text), dtype={"element": str, "midpoint": str}, keep_default_na=False)
    missing = [column for column in RANK_CSV_COLUMNS if column not in frame.columns]
    if missing:
        raise ParseError("Rank CSV lacks columns {}".format(", ".join(missing)))
    return frame.set_index("element")


def _comparison_frame(records: Sequence[ComparisonRecord]) -> pd.DataFrame:
    return pd.DataFrame.from_records(
        [
            {
                "a": r.a,
                "b": r.b,
                "relation": r.relation.symbol,
                "alpha_lo": r.alpha.lo,
                "alpha_hi": r.alpha.hi,
                "sep_lo": r.sep.lo,
                "sep_hi": r.sep.hi,
                "sep_width": r.sep_width,
                "a_group": r.a_group,
                "b_group": r.b_group,
            }
            for r in records
        ],
        columns=COMPARISON_CSV_COLUMNS + ["a_group", "b_group"],
    )


def write_comparison_csv(records: Sequence[ComparisonRecord], grouped: bool = False) -> str:
    """
    :param grouped: merge records whose elements share their rank intervals pairwise, naming each side by its
        group (e.g. "E,J"); all merged records carry identical values
    """
    frame = _comparison_frame(records)
    if grouped:
        frame = frame.groupby(["a_group", "b_group"], sort=False, as_index=False).first()
        frame["a"] = frame["a_group"]
        frame["b"] = frame["b_group"]
    return frame[COMPARISON_CSV_COLUMNS].to_csv(index=False, lineterminator="\n")


def write_comparison_text(records: Sequence[ComparisonRecord]) -> str:
    if not records:
        return "no comparisons\n"
    return _comparison_frame(records)[COMPARISON_CSV_COLUMNS].to_string(index=False) + "\n"


def _element_document(p: Poset, rt: RankTable) -> List[Dict[str, Any]]:
    return [
        {
            "element": row.element,
            "label": p.label(row.element),
            "up_height": row.up_height,
            "down_height": row.down_height,
            "r_top": row.r_top,
            "r_bottom": row.r_bottom,
            "width": row.width,
            "centrality": row.centrality,
            "midpoint": row.midpoint_doubled / 2,
            "freese": row.freese,
            "natural_rank": row.natural_rank,
            "proc_top": row.proc_top,
            "proc_bottom": row.proc_bottom,
            "precise": row.precise,
            "synthetic": row.synthetic,
        }
        for row in rt
    ]


def _comparison_document(records: Sequence[ComparisonRecord]) -> List[Dict[str, Any]]:
    return [
        {
            "a": r.a,
            "b": r.b,
            "relation": r.relation.name,
            "symbol": r.relation.symbol,
            "alpha": _pair(r.alpha),
            "sep": _pair(r.sep),
            "sep_width": r.sep_width,
            "a_group": r.a_group,
            "b_group": r.b_group,
        }
        for r in records
    ]


def write_report_json(p: Poset, rt: RankTable, matrix: Sequence[ComparisonRecord]) -> str:
    document = {
        "meta": {
            "height": p.height,
            "element_count": len(p),
            "chain_count": p.chain_count(),
            "graded": p.is_graded(),
            "spindle": sorted(row.element for row in rt if row.precise),
            "synthetic": sorted(p.synthetic),
        },
        "elements": _element_document(p, rt),
        "comparisons": _comparison_document(matrix),
    }
    return _dump(document)


class LayoutNode(NamedTuple):
    element: str
    label: str
    x: Fraction
    y_doubled: int
    interval: IntInterval
    spindle_flag: bool
    synthetic: bool


class LayoutEdge(NamedTuple):
    upper: str
    lower: str
    sep: IntInterval
    sep_width: int
    spindle: bool


class LayoutDocument(NamedTuple):
    nodes: List[LayoutNode]
    edges: List[LayoutEdge]


def build_layout(p: Poset, rt: RankTable) -> LayoutDocument:
    """
    Places every element at the midpoint of its rank interval. Elements sharing a midpoint are spread one unit apart,
    centred on x = 0, in lexicographic order.
    """
    levels: Dict[int, List[str]] = defaultdict(list)
    for a in p.elements:
        levels[rt[a].midpoint_doubled].append(a)

    nodes = []
    for doubled in sorted(levels):
        level = levels[doubled]
        for i, a in enumerate(level):
            row = rt[a]
            x = i - Fraction(len(level) - 1, 2)
            nodes.append(LayoutNode(a, p.label(a), x, doubled, row.interval, row.precise, row.synthetic))

    edges = []
    for record in comparison_matrix(rt, PairMode.COVERS):
        spindle = rt[record.a].precise and rt[record.b].precise and record.sep == IntInterval(1, 1)
        edges.append(LayoutEdge(record.a, record.b, record.sep, record.sep_width, spindle))
    return LayoutDocument(nodes, edges)


def _escape(value: str) -> str:
    return value.replace("\\", "\\\\").replace('"', '\\"')


def _quote(value: str) -> str:
    return '"{}"'.format(_escape(value))


def write_layout_dot(p: Poset, rt: RankTable) -> str:
    layout = build_layout(p, rt)
    lines = ["digraph poset {", "  node [shape=box];", "  edge [dir=none];"]
    for node in layout.nodes:
        attributes = [
            'label="{}\\n{}"'.format(_escape(node.label), node.interval),
            'pos="{},{}!"'.format(format_midpoint(int(2 * node.x)), format_midpoint(-node.y_doubled)),
        ]
        if node.synthetic:
            attributes.append("style=dashed")
        lines.append("  {} [{}];".format(_quote(node.element), ", ".join(attributes)))
    for edge in layout.edges:
        attributes = ["label={}".format(_quote("‖·‖={} W={}".format(edge.sep, edge.sep_width)))]
        if edge.spindle:
            attributes.append("style=bold")
        lines.append("  {} -> {} [{}];".format(_quote(edge.upper), _quote(edge.lower), ", ".join(attributes)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_assignment_json(text: str, order_tag: OrderTag, source_name: str = "<string>") -> RankAssignment:
    """
    Reads a JSON object mapping element ids to [lo, hi] pairs.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError("Invalid JSON: {}".format(ex.msg), source_name, ex.lineno) from ex
    if not isinstance(document, dict):
        raise ParseError("Rank assignment must be a JSON object", source_name)

    intervals = {}
    for element, value in document.items():
        if (
            not isinstance(value, list)
            or len(value) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)
        ):
            raise ParseError("Rank of '{}' must be a pair of integers, got {!r}".format(element, value), source_name)
        try:
            intervals[element] = IntInterval(value[0], value[1])
        except MalformedInterval as ex:
            raise ParseError("Rank of '{}': {}".format(element, ex), source_name) from ex
    return RankAssignment(intervals, order_tag)


def write_assignments_json(assignments: Sequence[RankAssignment], order_tag: OrderTag, elements: List[str]) -> str:
    document = {
        "order": order_tag.value,
        "count": len(assignments),
        "assignments": [{a: _pair(ra[a]) for a in elements} for ra in assignments],
    }
    return _dump(document)


def write_assignments_text(assignments: Sequence[RankAssignment], order_tag: OrderTag, elements: List[str]) -> str:
    lines = ["{} strict {} rank functions".format(len(assignments), order_tag.value)]
    for i, ra in enumerate(assignments, start=1):
        lines.append("{}: {}".format(i, " ".join("{}={}".format(a, ra[a]) for a in elements)))
    return "\n".join(lines) + "\n"


def write_validation_report(report: ValidationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return _dump(
            {
                "order": report.order_tag.value,
                "strict": report.strict,
                "valid": report.valid,
                "violations": [
                    {
                        "lower": v.lower,
                        "upper": v.upper,
                        "kind": v.kind,
                        "lower_interval": _pair(v.lower_interval),
                        "upper_interval": _pair(v.upper_interval),
                    }
                    for v in report.violations
                ],
            }
        )
    mode = "strict " if report.strict else ""
    if report.valid:
        return "valid {}{} rank function\n".format(mode, report.order_tag.value)
    lines = ["{} violations of {}{} rank function".format(len(report.violations), mode, report.order_tag.value)]
    lines.extend(str(v) for v in report.violations)
    return "\n".join(lines) + "\n"


def write_stats(stats: PosetStats, fmt: str = "text") -> str:
    if fmt == "json":
        document = {
            "height": stats.height,
            "element_count": stats.element_count,
            "cover_count": stats.cover_count,
            "chain_count": stats.chain_count,
            "truncated": stats.truncated,
            "spindle": stats.spindle,
            "spindle_chain_count": stats.spindle_chain_count,
            "graded": stats.graded,
            "width_histogram": {str(w): n for w, n in stats.width_histogram.items()},
        }
        if stats.chains is not None:
            document["chains"] = [list(chain) for chain in stats.chains]
        return _dump(document)

    lines = [
        "height: {}".format(stats.height),
        "elements: {}".format(stats.element_count),
        "covers: {}".format(stats.cover_count),
        "maximal chains: {}".format(stats.chain_count),
        "truncated: {}".format("true" if stats.truncated else "false"),
        "spindle: {}".format(" ".join(stats.spindle)),
        "spindle chains: {}".format(stats.spindle_chain_count),
        "graded: {}".format("true" if stats.graded else "false"),
        "width histogram: {}".format(" ".join("{}:{}".format(w, n) for w, n in stats.width_histogram.items())),
    ]
    if stats.chains is not None:
        lines.extend(" < ".join(chain) for chain in stats.chains)
    return "\n".join(lines) + "\n"
