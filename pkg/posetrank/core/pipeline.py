import logging
from abc import ABC
from typing import Any, Tuple

from .registry import Registry

log = logging.getLogger(__name__)


class PipelineComponent(ABC):
    def run(self, *args, **kwargs):
        """
        The real signature is (self, registry: Registry, *args) where args are the outputs of the previous component,
        but that cannot be expressed as a Python type hint without forcing a literal "*args" on every subclass.

        Returns a tuple, which becomes the positional arguments of the next component.
        """
        raise NotImplementedError

    def __str__(self) -> str:
        return str(self.__class__.__name__)


class RankPipeline(object):
    def __init__(self, registry: Registry, *components: PipelineComponent) -> None:
        self._registry = registry
        self._components = components

    @property
    def registry(self) -> Registry:
        return self._registry

    @property
    def components(self) -> Tuple[PipelineComponent, ...]:
        return self._components

    def run(self, initial_inputs: Tuple[Any, ...]) -> Tuple[Any, ...]:
        log.info("Starting pipeline")
        args = initial_inputs
        for component in self.components:
            log.info("Running component {}".format(component))
            try:
                args = component.run(self.registry, *args)
            except Exception:
                log.debug("Component {} failed".format(component), exc_info=True)
                raise
        log.info("Pipeline completed")
        return args
