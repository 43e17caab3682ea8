"""
Command-line entry point.

    posetrank rank --input ex9.tsv --output csv
    posetrank compare --input ex9.tsv --pairs covers
    posetrank check --input n5.tsv --ranks ranks.json --order weak-dual --strict

Exit codes: 0 success, 1 usage, parse or structural error, 2 rank assignment failed validation, 3 resource limit hit.
"""
import argparse
import logging.handlers
import sys
from dataclasses import dataclass
from typing import IO, List, Optional, Sequence

from posetrank.analysis import ChainCapExceeded
from posetrank.core.comparison import PairMode
from posetrank.core.hierarchy_reader import FORMATS, ParseError
from posetrank.core.intervals import MalformedInterval
from posetrank.core.poset import (
    DEFAULT_CHAIN_CAP,
    BoundingOptions,
    CycleDetected,
    DuplicateId,
    TooSmall,
    UnknownElement,
)
from posetrank.core.ranks import DEFAULT_MAX_ENUM_ELEMENTS, IncompleteAssignment, OrderTag, PosetTooLarge
from posetrank.service import Command, PosetRankService

log = logging.getLogger(__name__)

PROG = "posetrank"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3

OUTPUT_FORMATS = {
    Command.RANK: ("csv", "json", "text"),
    Command.COMPARE: ("csv", "json", "text"),
    Command.LAYOUT: ("dot",),
    Command.CHECK: ("text", "json"),
    Command.ENUMERATE: ("json", "text"),
    Command.STATS: ("text", "json"),
}

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(module)s - %(message)s"


class CliUsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise CliUsageError(message)


@dataclass(frozen=True)
class CliConfig:
    command: Command
    input_path: str
    input_format: str = "auto"
    output_format: Optional[str] = None
    out_path: Optional[str] = None
    pairs: PairMode = PairMode.ALL
    grouped: bool = False
    order_tag: OrderTag = OrderTag.WEAK_DUAL
    ranks_path: Optional[str] = None
    strict: bool = False
    chain_cap: int = DEFAULT_CHAIN_CAP
    max_enum_elements: int = DEFAULT_MAX_ENUM_ELEMENTS
    require_full_enumeration: bool = False
    bounding: BoundingOptions = BoundingOptions()
    list_chains: bool = False
    verbosity: int = 0
    log_file: Optional[str] = None

    def resolved_output_format(self, stdout: IO[str]) -> str:
        if self.output_format is not None:
            return self.output_format
        if self.command is Command.RANK:
            return "csv" if self.out_path is None and stdout.isatty() else "json"
        return OUTPUT_FORMATS[self.command][0]


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("'{}' is not an integer".format(value))
    if number < 1:
        raise argparse.ArgumentTypeError("'{}' is not a positive integer".format(value))
    return number


def _element_id(value: str) -> str:
    if not value:
        raise argparse.ArgumentTypeError("element ids cannot be empty")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", required=True, dest="input_path", help="hierarchy file to read")
    common.add_argument("--format", choices=FORMATS, default="auto", dest="input_format", help="input file format")
    common.add_argument("--out", dest="out_path", help="write the report here instead of standard output")
    common.add_argument("--chain-cap", type=_positive_int, default=DEFAULT_CHAIN_CAP, help="most chains to list")
    common.add_argument(
        "--require-full-enumeration",
        action="store_true",
        default=False,
        help="fail when a poset has more maximal chains than the chain cap",
    )
    common.add_argument("--force-bottom", action="store_true", default=False, help="always add a synthetic bottom")
    common.add_argument("--force-top", action="store_true", default=False, help="always add a synthetic top")
    common.add_argument("--bottom-name", type=_element_id, default="_BOT_", help="id of the synthetic bottom")
    common.add_argument("--top-name", type=_element_id, default="_TOP_", help="id of the synthetic top")
    common.add_argument("-v", "--verbose", action="count", default=0, dest="verbosity", help="more logging (-vv)")
    common.add_argument("--log-file", help="also log to this rotating file")

    order_choices = [tag.value for tag in OrderTag]

    parser = _ArgumentParser(prog=PROG, description="Interval-valued ranks for hierarchies and bounded posets.")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_command(command: Command, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(command.value, parents=[common], help=help_text)
        sub.add_argument("--output", choices=OUTPUT_FORMATS[command], dest="output_format", help="report format")
        return sub

    add_command(Command.RANK, "standard interval rank of every element")

    compare = add_command(Command.COMPARE, "pairwise comparison of rank intervals")
    compare.add_argument("--pairs", choices=[mode.value for mode in PairMode], default=PairMode.ALL.value)
    compare.add_argument(
        "--grouped", action="store_true", default=False, help="merge elements with equal ranks (csv output only)"
    )

    add_command(Command.LAYOUT, "DOT drawing with elements placed at their rank midpoints")

    check = add_command(Command.CHECK, "validate a rank assignment file")
    check.add_argument("--ranks", required=True, dest="ranks_path", help="JSON object mapping ids to [lo, hi]")
    check.add_argument("--order", choices=order_choices, default=OrderTag.WEAK_DUAL.value, dest="order_tag")
    check.add_argument("--strict", action="store_true", default=False, help="require strictly monotone endpoints")

    enumerate_ = add_command(Command.ENUMERATE, "list every strict interval rank function of a small poset")
    enumerate_.add_argument("--order", choices=order_choices, default=OrderTag.WEAK_DUAL.value, dest="order_tag")
    enumerate_.add_argument("--max-enum-elements", type=_positive_int, default=DEFAULT_MAX_ENUM_ELEMENTS)

    stats = add_command(Command.STATS, "height, chains, spindle and rank widths")
    stats.add_argument("--list-chains", action="store_true", default=False, help="also list the maximal chains")

    return parser


def parse_config(argv: Sequence[str]) -> CliConfig:
    """
    Turns command-line arguments into a CliConfig. Raises CliUsageError for bad or incompatible flags, before any
    file is touched.
    """
    args = build_parser().parse_args(list(argv))
    command = Command(args.command)

    grouped = getattr(args, "grouped", False)
    if grouped and args.output_format not in (None, "csv"):
        raise CliUsageError("--grouped only applies to csv output")

    return CliConfig(
        command=command,
        input_path=args.input_path,
        input_format=args.input_format,
        output_format=args.output_format,
        out_path=args.out_path,
        pairs=PairMode(getattr(args, "pairs", PairMode.ALL.value)),
        grouped=grouped,
        order_tag=OrderTag(getattr(args, "order_tag", OrderTag.WEAK_DUAL.value)),
        ranks_path=getattr(args, "ranks_path", None),
        strict=getattr(args, "strict", False),
        chain_cap=args.chain_cap,
        max_enum_elements=getattr(args, "max_enum_elements", DEFAULT_MAX_ENUM_ELEMENTS),
        require_full_enumeration=args.require_full_enumeration,
        bounding=BoundingOptions(args.bottom_name, args.top_name, args.force_bottom, args.force_top),
        list_chains=getattr(args, "list_chains", False),
        verbosity=args.verbosity,
        log_file=args.log_file,
    )


_installed_handlers: List[logging.Handler] = []


def configure_logging(verbosity: int, log_file: Optional[str], stream: IO[str]) -> None:
    root = logging.getLogger()
    for handler in _installed_handlers:
        root.removeHandler(handler)
    _installed_handlers.clear()

    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    root.setLevel(level)
    formatter = logging.Formatter(fmt=LOG_FORMAT)

    stream_handler = logging.StreamHandler(stream)
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(level)
    _installed_handlers.append(stream_handler)

    if log_file:
        rotating_file_handler = logging.handlers.RotatingFileHandler(
            log_file, mode="a", maxBytes=5 * 1024 * 1024, backupCount=2, encoding="utf-8", delay=False
        )
        rotating_file_handler.setFormatter(formatter)
        rotating_file_handler.setLevel(logging.DEBUG)
        _installed_handlers.append(rotating_file_handler)
        root.setLevel(logging.DEBUG)

    for handler in _installed_handlers:
        root.addHandler(handler)


def _fail(stderr: IO[str], message: str, location: Optional[str] = None) -> None:
    if location:
        stderr.write("{}: error: {}: {}\n".format(PROG, location, message))
    else:
        stderr.write("{}: error: {}\n".format(PROG, message))


def run(config: CliConfig, stdout: IO[str], stderr: IO[str]) -> int:
    service = PosetRankService(
        bounding_options=config.bounding,
        chain_cap=config.chain_cap,
        max_enum_elements=config.max_enum_elements,
        require_full_enumeration=config.require_full_enumeration,
    )
    options = {"list_chains": config.list_chains}
    if config.command is Command.COMPARE:
        options.update(pairs=config.pairs, grouped=config.grouped)
    elif config.command is Command.CHECK:
        options.update(order_tag=config.order_tag, ranks_path=config.ranks_path, strict=config.strict)
    elif config.command is Command.ENUMERATE:
        options.update(order_tag=config.order_tag)

    try:
        text, ok = service.run_pipeline(
            config.command,
            config.input_path,
            config.input_format,
            config.resolved_output_format(stdout),
            **options
        )
    except ParseError as ex:
        _fail(stderr, ex.message, ex.location)
        return EXIT_ERROR
    except (CycleDetected, TooSmall, DuplicateId) as ex:
        _fail(stderr, str(ex), config.input_path)
        return EXIT_ERROR
    except (IncompleteAssignment, UnknownElement, MalformedInterval) as ex:
        _fail(stderr, str(ex), config.ranks_path)
        return EXIT_ERROR
    except OSError as ex:
        _fail(stderr, ex.strerror or str(ex), ex.filename)
        return EXIT_ERROR
    except (PosetTooLarge, ChainCapExceeded) as ex:
        _fail(stderr, str(ex), config.input_path)
        return EXIT_LIMIT

    if config.out_path:
        try:
            with open(config.out_path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        except OSError as ex:
            _fail(stderr, ex.strerror or str(ex), config.out_path)
            return EXIT_ERROR
        log.info("Wrote report to {}".format(config.out_path))
    else:
        stdout.write(text)
    return EXIT_OK if ok else EXIT_INVALID


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_config(argv)
    except CliUsageError as ex:
        build_parser().print_usage(sys.stderr)
        _fail(sys.stderr, str(ex))
        return EXIT_ERROR
    configure_logging(config.verbosity, config.log_file, sys.stderr)
    return run(config, sys.stdout, sys.stderr)
