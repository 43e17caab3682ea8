import logging
from typing import Tuple

from posetrank.core.hierarchy_reader import EdgeDocument, read_hierarchy_file
from posetrank.core.pipeline import PipelineComponent
from posetrank.core.poset import BoundingOptions, Poset, build_poset
from posetrank.core.registry import Registry

log = logging.getLogger(__name__)


class HierarchyReader(PipelineComponent):
    def run(self, registry: Registry, path: str, fmt: str) -> Tuple[EdgeDocument]:
        log.info("Reading hierarchy from {} (format {})".format(path, fmt))
        return (read_hierarchy_file(path, fmt),)


class PosetBuilder(PipelineComponent):
    """
    Closes, bounds and reduces the edges of a document into a Poset, using the run-wide BoundingOptions.
    """

    def run(self, registry: Registry, document: EdgeDocument) -> Tuple[Poset]:
        options: BoundingOptions = registry.get("bounding-options")
        poset = build_poset(document.edges, options, isolated=document.isolated, labels=document.labels)
        log.info("Built {} from {}".format(poset, document.source_name))
        return (poset,)
