"""Command router with a plugin pipeline.

``CommandRouter`` adds to :class:`BaseCommandRouter` a global plugin registry
and a per-router middleware chain.

- ``CommandRouter.register_plugin(plugin_class)`` registers a
  :class:`BasePlugin` subclass under its ``plugin_code``. Registering another
  class under a taken code raises ``ValueError``.
- ``plug(name, **config)`` instantiates the plugin for this router, applies
  ``on_decore`` to the existing entries and returns the router so calls
  chain: ``CommandRouter(self, name="api").plug("logging").plug("pydantic")``.
- Plugin state lives in ``_plugin_info[plugin]["_all_" | command]`` with a
  ``config`` and a ``locals`` dict each. ``set_plugin_enabled`` toggles a
  plugin for one command.
- Wrapping runs the plugins in reverse order, so the first plugged plugin is
  the outermost layer.
"""

from __future__ import annotations

from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Type

from blobkl.commands.base_router import BaseCommandRouter
from blobkl.plugins._base_plugin import BasePlugin, CommandEntry

__all__ = ["CommandRouter"]

_PLUGIN_REGISTRY: Dict[str, Type[BasePlugin]] = {}


class CommandRouter(BaseCommandRouter):
    """Router with plugin registry and middleware support."""

    __slots__ = BaseCommandRouter.__slots__ + (
        "_plugins",
        "_plugins_by_name",
        "_plugin_info",
    )

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        self._plugins: List[BasePlugin] = []
        self._plugins_by_name: Dict[str, BasePlugin] = {}
        self._plugin_info: Dict[str, Dict[str, Any]] = {}
        super().__init__(*args, **kwargs)

    # ------------------------------------------------------------------
    # Plugin registration
    # ------------------------------------------------------------------
    @classmethod
    def register_plugin(cls, plugin_class: Type[BasePlugin]) -> None:
        if not isinstance(plugin_class, type) or not issubclass(plugin_class, BasePlugin):
            raise TypeError("plugin_class must be a BasePlugin subclass")
        code = getattr(plugin_class, "plugin_code", "")
        if not code:
            raise ValueError(f"Plugin {plugin_class.__name__} is missing plugin_code")
        existing = _PLUGIN_REGISTRY.get(code)
        if existing is not None and existing is not plugin_class:
            raise ValueError(f"Plugin '{code}' already registered")
        _PLUGIN_REGISTRY[code] = plugin_class

    @classmethod
    def available_plugins(cls) -> Dict[str, Type[BasePlugin]]:
        return dict(_PLUGIN_REGISTRY)

    def plug(self, plugin: str, **config: Any) -> "CommandRouter":
        """Attach a registered plugin by name."""
        plugin_class = _PLUGIN_REGISTRY.get(plugin)
        if plugin_class is None:
            available = ", ".join(sorted(_PLUGIN_REGISTRY)) or "none"
            raise ValueError(f"Unknown plugin '{plugin}'. Available plugins: {available}")
        instance = plugin_class(router=self, **config)
        self._plugins.append(instance)
        self._plugins_by_name.setdefault(instance.name, instance)
        for entry in self._entries.values():
            self._decorate(instance, entry)
        self._rebuild_handlers()
        return self

    def iter_plugins(self) -> List[BasePlugin]:
        return list(self._plugins)

    def __getattr__(self, name: str) -> Any:
        if name.startswith("_"):
            raise AttributeError(name)
        plugin = self._plugins_by_name.get(name)
        if plugin is None:
            raise AttributeError(f"No plugin named '{name}' attached to router '{self.name}'")
        return plugin

    # ------------------------------------------------------------------
    # Runtime flags
    # ------------------------------------------------------------------
    def _bucket(self, plugin_name: str) -> Dict[str, Any]:
        bucket = self._plugin_info.get(plugin_name)
        if bucket is None:
            raise AttributeError(
                f"No plugin named '{plugin_name}' attached to router '{self.name}'"
            )
        return bucket

    def set_plugin_enabled(self, method_name: str, plugin_name: str, enabled: bool = True) -> None:
        bucket = self._bucket(plugin_name)
        slot = bucket.setdefault(method_name, {"config": {}, "locals": {}})
        slot.setdefault("locals", {})["enabled"] = bool(enabled)

    def is_plugin_enabled(self, method_name: str, plugin_name: str) -> bool:
        bucket = self._bucket(plugin_name)
        entry_locals = bucket.get(method_name, {}).get("locals", {})
        if "enabled" in entry_locals:
            return bool(entry_locals["enabled"])
        return bool(bucket.get("_all_", {}).get("locals", {}).get("enabled", True))

    # ------------------------------------------------------------------
    # Hooks
    # ------------------------------------------------------------------
    def _decorate(self, plugin: BasePlugin, entry: CommandEntry) -> None:
        if plugin.name not in entry.plugins:
            entry.plugins.append(plugin.name)
        plugin.on_decore(self, entry.func, entry)

    def _after_entry_registered(self, entry: CommandEntry) -> None:
        for plugin in self._plugins:
            self._decorate(plugin, entry)

    def _wrap_handler(self, entry: CommandEntry, call_next: Callable) -> Callable:
        wrapped = call_next
        for plugin in reversed(self._plugins):
            plugin_call = plugin.wrap_handler(self, entry, wrapped)
            wrapped = self._create_wrapper(plugin, entry, plugin_call, wrapped)
        return wrapped

    def _create_wrapper(
        self,
        plugin: BasePlugin,
        entry: CommandEntry,
        plugin_call: Callable,
        next_handler: Callable,
    ) -> Callable:
        @wraps(next_handler)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            if not self.is_plugin_enabled(entry.name, plugin.name):
                return next_handler(*args, **kwargs)
            return plugin_call(*args, **kwargs)

        return wrapper

    def _describe_entry_extra(self, entry: CommandEntry) -> Dict[str, Any]:
        plugins_info: Dict[str, Dict[str, Any]] = {}
        for plugin in self._plugins:
            data: Dict[str, Any] = {}
            config = plugin.configuration(entry.name)
            if config:
                data["config"] = config
            meta = plugin.entry_metadata(self, entry)
            if meta:
                data["metadata"] = meta
            if data:
                plugins_info[plugin.name] = data
        return {"plugin_info": plugins_info} if plugins_info else {}

    def get_config(self, plugin_name: str, method_name: Optional[str] = None) -> Dict[str, Any]:
        plugin = self._plugins_by_name.get(plugin_name)
        if plugin is None:
            raise AttributeError(
                f"No plugin named '{plugin_name}' attached to router '{self.name}'"
            )
        return plugin.configuration(method_name)
