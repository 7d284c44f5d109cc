"""Plugin-free command router.

``BaseCommandRouter`` binds the methods of one owner object as named
commands. Methods are picked up through markers left by
:func:`blobkl.commands.decorators.command`; the router walks the MRO
of the owner's class so subclasses can override a command by redefining the
method.

Constructor::

    BaseCommandRouter(owner, name=None, prefix=None, *,
                      get_default_handler=None, get_kwargs=None,
                      auto_discover=True)

- ``owner`` is required. If it defines ``_register_router`` the router
  registers itself there.
- ``prefix`` is stripped from method names (``cmd_kl`` -> ``kl``).
- ``get_default_handler`` and ``get_kwargs`` become the defaults merged with
  ``SmartOptions`` in :meth:`get`.

Each registered command is a :class:`CommandEntry`. Its ``metadata`` keeps
the marker payload (``help``, ``flags``); the CLI builds its subparsers from
:meth:`describe`. ``_wrap_handler`` is a passthrough here and is overridden
by :class:`blobkl.commands.router.CommandRouter` to add the plugin chain.
"""

from __future__ import annotations

import inspect
from typing import Any, Callable, Dict, Iterator, Optional, Tuple

from smartseeds import SmartOptions

from blobkl.plugins._base_plugin import CommandEntry

__all__ = ["BaseCommandRouter", "TARGET_ATTR_NAME", "ROUTER_REGISTRY_ATTR_NAME"]

TARGET_ATTR_NAME = "__blobkl_commands__"
ROUTER_REGISTRY_ATTR_NAME = "__blobkl_router_registry__"


class BaseCommandRouter:
    """Named commands bound to an owner instance."""

    __slots__ = ("instance", "name", "prefix", "_entries", "_handlers", "_get_defaults")

    def __init__(
        self,
        owner: Any,
        name: Optional[str] = None,
        prefix: Optional[str] = None,
        *,
        get_default_handler: Optional[Callable] = None,
        get_kwargs: Optional[Dict[str, Any]] = None,
        auto_discover: bool = True,
    ) -> None:
        if owner is None:
            raise ValueError("Command router requires an owner instance")
        self.instance = owner
        self.name = name
        self.prefix = prefix or ""
        self._entries: Dict[str, CommandEntry] = {}
        self._handlers: Dict[str, Callable] = {}
        defaults: Dict[str, Any] = dict(get_kwargs or {})
        if get_default_handler is not None:
            defaults.setdefault("default_handler", get_default_handler)
        self._get_defaults: Dict[str, Any] = defaults
        hook = getattr(self.instance, "_register_router", None)
        if callable(hook):
            hook(self)
        if auto_discover:
            self.add_entry("*")

    # ------------------------------------------------------------------
    # Registration
    # ------------------------------------------------------------------
    def add_entry(
        self,
        target: Any,
        *,
        name: Optional[str] = None,
        metadata: Optional[Dict[str, Any]] = None,
        replace: bool = False,
        **options: Any,
    ) -> "BaseCommandRouter":
        """Register a callable, an owner attribute name, or ``"*"`` for all
        marked methods. Returns ``self``.

        Raises:
            ValueError: on a name collision when ``replace`` is false.
            TypeError: on an unsupported target.
        """
        if isinstance(target, str):
            target = target.strip()
            if not target:
                return self
            if target == "*":
                for func, marker in self._iter_marked_methods():
                    entry_name = name or marker.pop("entry_name", None)
                    meta = dict(metadata or {})
                    meta.update(marker)
                    meta.update(options)
                    bound = func.__get__(self.instance, type(self.instance))
                    self._register_callable(bound, name=entry_name, metadata=meta, replace=replace)
                return self
            bound = getattr(self.instance, target)
        elif callable(target):
            bound = (
                target
                if inspect.ismethod(target)
                else target.__get__(self.instance, type(self.instance))
            )
        else:
            raise TypeError(f"Unsupported add_entry target: {target!r}")
        meta = dict(metadata or {})
        meta.update(options)
        self._register_callable(bound, name=name, metadata=meta, replace=replace)
        return self

    def _register_callable(
        self,
        bound: Callable,
        *,
        name: Optional[str] = None,
        metadata: Optional[Dict[str, Any]] = None,
        replace: bool = False,
    ) -> None:
        logical_name = self._resolve_name(bound.__name__, name_override=name)
        if logical_name in self._entries and not replace:
            raise ValueError(f"Command name collision: {logical_name}")
        entry = CommandEntry(
            name=logical_name,
            func=bound,
            router=self,
            plugins=[],
            metadata=dict(metadata or {}),
        )
        self._entries[logical_name] = entry
        self._after_entry_registered(entry)
        self._rebuild_handlers()

    def _iter_marked_methods(self) -> Iterator[Tuple[Callable, Dict[str, Any]]]:
        seen: set[str] = set()
        for base in type(self.instance).__mro__:
            for attr_name, value in vars(base).items():
                if attr_name in seen or not inspect.isfunction(value):
                    continue
                seen.add(attr_name)
                for marker in getattr(value, TARGET_ATTR_NAME, ()):
                    if marker.get("name") != self.name:
                        continue
                    payload = dict(marker)
                    payload.pop("name", None)
                    yield value, payload

    def _resolve_name(self, func_name: str, *, name_override: Optional[str]) -> str:
        if name_override:
            return name_override
        if self.prefix and func_name.startswith(self.prefix):
            return func_name[len(self.prefix) :]
        return func_name

    # ------------------------------------------------------------------
    # Handler table
    # ------------------------------------------------------------------
    def _wrap_handler(self, entry: CommandEntry, call_next: Callable) -> Callable:
        return call_next

    def _after_entry_registered(self, entry: CommandEntry) -> None:
        return None

    def _rebuild_handlers(self) -> None:
        self._handlers = {
            logical_name: self._wrap_handler(entry, entry.func)
            for logical_name, entry in self._entries.items()
        }

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------
    def get(self, selector: str, **options: Any) -> Callable:
        """Return the wrapped handler for ``selector``.

        Falls back to ``default_handler`` when given; otherwise an unknown
        command raises ``NotImplementedError``.
        """
        opts = SmartOptions(options, defaults=self._get_defaults)
        handler = self._handlers.get(selector)
        if handler is None:
            handler = getattr(opts, "default_handler", None)
        if handler is None:
            raise NotImplementedError(f"Command '{selector}' is not registered")
        return handler

    __getitem__ = get

    def call(self, selector: str, *args: Any, **kwargs: Any) -> Any:
        return self.get(selector)(*args, **kwargs)

    def entries(self) -> Tuple[str, ...]:
        return tuple(self._handlers.keys())

    def entry(self, name: str) -> CommandEntry:
        return self._entries[name]

    def describe(self) -> Dict[str, Dict[str, Any]]:
        """Per-command ``help``, ``flags`` and docstring, in registration order."""
        out: Dict[str, Dict[str, Any]] = {}
        for entry in self._entries.values():
            info: Dict[str, Any] = {
                "name": entry.name,
                "help": entry.metadata.get("help", ""),
                "flags": tuple(entry.metadata.get("flags", ())),
                "doc": inspect.getdoc(entry.func) or "",
                "plugins": list(entry.plugins),
            }
            info.update(self._describe_entry_extra(entry))
            out[entry.name] = info
        return out

    def _describe_entry_extra(self, entry: CommandEntry) -> Dict[str, Any]:
        return {}
