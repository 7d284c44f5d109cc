"""Mixin for classes that own command routers.

``CommandSet`` keeps a per-instance registry of routers (filled by the
routers themselves on construction) and exposes a ``commandset`` proxy for
runtime configuration:

    commands.commandset.configure("api:logging", before=False)
    commands.commandset.configure("api:logging/verify", enabled=False)
    commands.commandset.configure("?")          # describe every router

Targets read ``router:plugin[/selector]``; the selector is a comma-separated
list of fnmatch patterns over command names and defaults to ``_all_``.
"""

from __future__ import annotations

from fnmatch import fnmatchcase
from typing import TYPE_CHECKING, Any, Dict, Iterator, Optional, Set, Tuple

from smartseeds.typeutils import safe_is_instance

from blobkl.commands.base_router import ROUTER_REGISTRY_ATTR_NAME

if TYPE_CHECKING:  # pragma: no cover
    from blobkl.commands.router import CommandRouter

__all__ = ["CommandSet"]

_PROXY_ATTR_NAME = "__commandset_proxy__"


class CommandSet:
    __slots__ = (_PROXY_ATTR_NAME, ROUTER_REGISTRY_ATTR_NAME)

    def _register_router(self, router: "CommandRouter") -> None:
        registry = getattr(self, ROUTER_REGISTRY_ATTR_NAME, None)
        if registry is None:
            registry = {}
            setattr(self, ROUTER_REGISTRY_ATTR_NAME, registry)
        if router.name:
            registry[router.name] = router

    def _iter_registered_routers(self) -> Iterator[Tuple[str, "CommandRouter"]]:
        registry = getattr(self, ROUTER_REGISTRY_ATTR_NAME, None) or {}
        yield from registry.items()

    @property
    def commandset(self) -> "_CommandSetProxy":
        proxy = getattr(self, _PROXY_ATTR_NAME, None)
        if proxy is None:
            proxy = _CommandSetProxy(self)
            setattr(self, _PROXY_ATTR_NAME, proxy)
        return proxy


class _CommandSetProxy:
    def __init__(self, owner: CommandSet):
        self._owner = owner

    def get_router(self, name: str) -> "CommandRouter":
        registry = getattr(self._owner, ROUTER_REGISTRY_ATTR_NAME, None) or {}
        router = registry.get(name)
        if router is None:
            candidate = getattr(self._owner, name, None)
            if safe_is_instance(candidate, "blobkl.commands.base_router.BaseCommandRouter"):
                registry[name] = candidate
                router = candidate
        if router is None:
            raise AttributeError(f"No router named '{name}' on {type(self._owner).__name__}")
        return router

    @staticmethod
    def _parse_target(target: str) -> Tuple[str, str, str]:
        if ":" not in target:
            raise ValueError("Target must include router:plugin")
        router_part, rest = (part.strip() for part in target.split(":", 1))
        if not router_part:
            raise ValueError("Router name cannot be empty")
        plugin_part, _, selector = rest.partition("/")
        plugin_part = plugin_part.strip()
        if not plugin_part:
            raise ValueError("Plugin name cannot be empty")
        return router_part, plugin_part, selector.strip() or "_all_"

    @staticmethod
    def _match_handlers(router: "CommandRouter", selector: str) -> Set[str]:
        patterns = [token.strip() for token in selector.split(",") if token.strip()]
        return {
            name
            for name in router.entries()
            if any(fnmatchcase(name, pattern) for pattern in patterns)
        }

    def describe(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {}
        for name, router in self._owner._iter_registered_routers():
            result[name] = {
                "name": router.name,
                "plugins": [
                    {
                        "name": plugin.name,
                        "description": plugin.plugin_description,
                        "config": plugin.configuration(),
                    }
                    for plugin in router.iter_plugins()
                ],
                "entries": list(router.entries()),
            }
        return result

    def configure(self, target: str, **options: Any) -> Optional[Dict[str, Any]]:
        target = target.strip()
        if target == "?":
            if options:
                raise ValueError("Options are not allowed with '?'")
            return self.describe()
        router_name, plugin_name, selector = self._parse_target(target)
        router = self.get_router(router_name)
        plugin = getattr(router, plugin_name)
        if not options:
            raise ValueError("No configuration options provided")
        if selector == "_all_":
            plugin.configure(_target="_all_", **options)
            return {"target": target, "updated": ["_all_"]}
        matches = self._match_handlers(router, selector)
        if not matches:
            raise KeyError(f"No commands matching '{selector}' on router '{router_name}'")
        for name in sorted(matches):
            plugin.configure(_target=name, **options)
        return {"target": target, "updated": sorted(matches)}
