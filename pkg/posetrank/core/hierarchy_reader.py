"""
Readers for hierarchy files.

Two formats are understood:

Edge lists
==========
One edge per line, child and parent separated by a single tab. The child is asserted to be strictly below the
parent. Blank lines and lines starting with "#" are skipped.

OBO
===
A minimal subset of the OBO flat file format. Only `[Term]` stanzas are read, and in them only the `id:`, `name:`,
`is_a:` and `is_obsolete:` tags. Every `is_a: X` in the stanza of term T gives an edge (T, X). Anything after a "!"
is a comment. Obsolete terms are skipped, other stanza types (e.g. `[Typedef]`) and other tags are ignored.
"""
import logging
import re
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Tuple

log = logging.getLogger(__name__)

FORMATS = ("auto", "edgelist", "obo")

stanza_re = re.compile(r"^\[(?P<kind>[^\]]+)\]\s*$")
tag_re = re.compile(r"^(?P<tag>[A-Za-z_-]+):\s*(?P<value>.*)$")


class ParseError(Exception):
    def __init__(self, message: str, source_name: Optional[str] = None, line_number: Optional[int] = None) -> None:
        self.message = message
        self.source_name = source_name
        self.line_number = line_number
        super().__init__(message)

    @property
    def location(self) -> Optional[str]:
        if self.source_name is None:
            return None
        if self.line_number is None:
            return self.source_name
        return "{}:{}".format(self.source_name, self.line_number)


class EdgeDocument(NamedTuple):
    edges: List[Tuple[str, str]]
    source_name: str
    line_numbers: List[int]
    isolated: Tuple[str, ...] = ()
    labels: Optional[Dict[str, str]] = None


def parse_edgelist(text: str, source_name: str = "<string>") -> EdgeDocument:
    edges, line_numbers = [], []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) != 2:
            raise ParseError(
                "Expected 2 tab-separated fields, found {}".format(len(fields)), source_name, line_number
            )
        if not all(fields):
            raise ParseError("Empty element id", source_name, line_number)
        edges.append((fields[0], fields[1]))
        line_numbers.append(line_number)
    log.info("Read {} edges from edge list {}".format(len(edges), source_name))
    return EdgeDocument(edges, source_name, line_numbers)


class _Stanza(object):
    def __init__(self, kind: str, line_number: int) -> None:
        self.kind = kind
        self.line_number = line_number
        self.id: Optional[str] = None
        self.name: Optional[str] = None
        self.parents: List[Tuple[str, int]] = []
        self.obsolete = False


def _strip_comment(value: str) -> str:
    return value.split("!", 1)[0].strip()


def parse_obo(text: str, source_name: str = "<string>") -> EdgeDocument:
    edges: List[Tuple[str, str]] = []
    line_numbers: List[int] = []
    isolated: List[str] = []
    labels: Dict[str, str] = {}
    stanza: Optional[_Stanza] = None

    def close(s: Optional[_Stanza]) -> None:
        if s is None or s.kind != "Term":
            return
        if s.id is None:
            raise ParseError("[Term] stanza without an id", source_name, s.line_number)
        if s.obsolete:
            log.debug("Skipping obsolete term {}".format(s.id))
            return
        if s.name:
            labels[s.id] = s.name
        if not s.parents:
            isolated.append(s.id)
        for parent, line_number in s.parents:
            edges.append((s.id, parent))
            line_numbers.append(line_number)

    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("!"):
            continue
        header = stanza_re.match(stripped)
        if header:
            close(stanza)
            stanza = _Stanza(header.group("kind").strip(), line_number)
            continue
        tagged = tag_re.match(stripped)
        if not tagged:
            continue
        tag, value = tagged.group("tag"), _strip_comment(tagged.group("value"))
        if stanza is None:
            if tag in ("id", "is_a"):
                raise ParseError("'{}:' outside of any stanza".format(tag), source_name, line_number)
            continue
        if stanza.kind != "Term":
            continue
        if tag == "id":
            if not value:
                raise ParseError("Empty term id", source_name, line_number)
            stanza.id = value
        elif tag == "name":
            stanza.name = value
        elif tag == "is_a":
            # Trailing qualifiers such as {source="..."} are not part of the id
            target = value.split("{", 1)[0].strip()
            if not target:
                raise ParseError("Empty is_a target", source_name, line_number)
            stanza.parents.append((target, line_number))
        elif tag == "is_obsolete":
            stanza.obsolete = value.lower() == "true"
    close(stanza)

    log.info(
        "Read {} edges and {} isolated terms from OBO file {}".format(len(edges), len(isolated), source_name)
    )
    return EdgeDocument(edges, source_name, line_numbers, tuple(isolated), labels)


def detect_format(path: str, text: str) -> str:
    if Path(path).suffix.lower() == ".obo":
        return "obo"
    if any(line.strip() == "[Term]" for line in text.splitlines()):
        return "obo"
    return "edgelist"


def read_hierarchy_file(path: str, fmt: str = "auto") -> EdgeDocument:
    """
    Read a hierarchy from a file. The file is assumed to be utf-8 encoded.

    :param path: path to file
    :param fmt: one of "auto", "edgelist" or "obo"; "auto" picks OBO for a .obo suffix or a [Term] line
    :return: EdgeDocument with source_name set to the path
    """
    if fmt not in FORMATS:
        raise ValueError("Unknown input format '{}'".format(fmt))
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as ex:
        raise ParseError("File is not valid UTF-8 ({})".format(ex.reason), path) from ex
    if fmt == "auto":
        fmt = detect_format(path, text)
        log.debug("Detected format {} for {}".format(fmt, path))
    if fmt == "obo":
        return parse_obo(text, path)
    return parse_edgelist(text, path)
