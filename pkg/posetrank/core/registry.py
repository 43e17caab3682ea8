from typing import Any, Dict


class ComponentNameCollisionError(Exception):
    pass


class UnknownComponentException(Exception):
    pass


class Registry(object):
    """
    Run-wide settings looked up by name by the pipeline components: the bounding options, the chain cap, the
    enumeration size limit and whether a truncated chain listing is an error.

    Settings are registered once per service and never replaced, so every pipeline of a service sees the same values.
    """

    def __init__(self) -> None:
        self._settings: Dict[str, Any] = {}

    def register(self, name: str, value: Any) -> None:
        if name in self._settings:
            raise ComponentNameCollisionError(
                "Setting '{}' is already registered as {!r}".format(name, self._settings[name])
            )
        self._settings[name] = value

    def get(self, name: str) -> Any:
        if name not in self._settings:
            raise UnknownComponentException(
                "No setting named '{}', known settings: {}".format(name, ", ".join(sorted(self._settings)) or "none")
            )
        return self._settings[name]
