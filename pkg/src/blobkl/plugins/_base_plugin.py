"""Plugin contract for the command routers.

``CommandEntry``
    Dataclass created when a command is registered: ``name``, bound ``func``,
    owning ``router``, the ``plugins`` applied to it (in order) and a mutable
    ``metadata`` dict where plugins store what they precompute.

``BasePlugin``
    Base class of every plugin. Subclasses set ``plugin_code`` and
    ``plugin_description`` and declare their options as the keyword
    parameters of ``configure``. ``__init_subclass__`` wraps that method so a
    call

        plugin.configure(_target="verify", flags="before:off", after=True)

    parses ``flags`` into booleans, fans out comma-separated targets,
    validates the options with pydantic's ``validate_call`` and writes them to
    the router's ``_plugin_info`` store. ``configuration(name)`` reads the
    router-level options merged with the per-command override.

    Hooks: ``on_decore`` at registration, ``wrap_handler`` for the middleware
    chain, ``entry_metadata`` for ``describe()``.

Plugins never keep configuration on themselves; the router owns the store.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import wraps
from typing import Any, Callable, Dict, List, Optional

from pydantic import validate_call

__all__ = ["BasePlugin", "CommandEntry"]


@dataclass
class CommandEntry:
    """A registered command."""

    name: str
    func: Callable
    router: Any
    plugins: List[str]
    metadata: Dict[str, Any] = field(default_factory=dict)


def _wrap_configure(original_configure: Callable) -> Callable:
    validated = validate_call(original_configure)

    @wraps(original_configure)
    def wrapper(
        self: "BasePlugin", *, _target: str = "_all_", flags: Optional[str] = None, **kwargs: Any
    ) -> None:
        if flags:
            kwargs.update(self._parse_flags(flags))
        if "," in _target:
            for target in (t.strip() for t in _target.split(",")):
                if target:
                    wrapper(self, _target=target, **kwargs)
            return
        validated(self, **kwargs)
        self._write_config(_target, kwargs)

    return wrapper


class BasePlugin:
    """Hook interface and configuration helpers for router plugins."""

    __slots__ = ("name", "_router")

    plugin_code: str = ""
    plugin_description: str = ""

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if "configure" in cls.__dict__:
            cls.configure = _wrap_configure(cls.__dict__["configure"])  # type: ignore[method-assign]

    def __init__(self, router: Any, **config: Any) -> None:
        self.name = self.plugin_code
        self._router = router
        self._get_store().setdefault(self.name, {}).setdefault(
            "_all_", {"config": {"enabled": True}, "locals": {}}
        )
        self.configure(**config)

    # ------------------------------------------------------------------
    # Configuration store
    # ------------------------------------------------------------------
    def _get_store(self) -> Dict[str, Any]:
        return getattr(self._router, "_plugin_info")

    def _write_config(self, target: str, config: Dict[str, Any]) -> None:
        if not config:
            return
        bucket = self._get_store().setdefault(self.name, {})
        slot = bucket.setdefault(target, {"config": {}, "locals": {}})
        slot["config"].update(config)

    def configuration(self, method_name: Optional[str] = None) -> Dict[str, Any]:
        """Router-level options, overridden by those of ``method_name``."""
        bucket = self._get_store().get(self.name)
        if not bucket:
            return {}
        merged = dict(bucket.get("_all_", {}).get("config", {}))
        if method_name:
            merged.update(bucket.get(method_name, {}).get("config", {}))
        return merged

    @staticmethod
    def _parse_flags(flags: str) -> Dict[str, bool]:
        mapping: Dict[str, bool] = {}
        for chunk in flags.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if ":" in chunk:
                name, value = chunk.split(":", 1)
                mapping[name.strip()] = value.strip().lower() != "off"
            else:
                mapping[chunk] = True
        return mapping

    # ------------------------------------------------------------------
    # Hooks
    # ------------------------------------------------------------------
    def configure(self, *, _target: str = "_all_", flags: Optional[str] = None) -> None:
        """Declare options as keyword parameters in subclasses."""
        if flags:
            self._write_config(_target, self._parse_flags(flags))

    def on_decore(self, router: Any, func: Callable, entry: CommandEntry) -> None:
        """Run once per command at registration."""

    def wrap_handler(self, router: Any, entry: CommandEntry, call_next: Callable) -> Callable:
        """Return a callable with the signature of ``call_next``."""
        return call_next

    def entry_metadata(self, router: Any, entry: CommandEntry) -> Dict[str, Any]:
        return {}
