"""Timing log for commands.

Each call emits ``"{name} start"`` before and ``"{name} end (<ms> ms)"``
after the command, measured with ``time.perf_counter``. Options
(router-level or per command): ``enabled``, ``before``, ``after``, ``log``
and ``print``.

- ``print`` writes the line to stderr.
- ``log`` sends it to the ``blobkl`` logger at INFO when that logger has
  handlers, and to stderr otherwise.

stdout is never touched: it carries the command output. An exception skips
the end line and propagates.
"""

from __future__ import annotations

import logging
import sys
import time
from typing import Any, Callable, Dict, Optional

from blobkl.commands.router import CommandRouter
from blobkl.plugins._base_plugin import BasePlugin, CommandEntry

_DEFAULTS = {"enabled": True, "before": True, "after": True, "log": True, "print": False}


class LoggingPlugin(BasePlugin):
    plugin_code = "logging"
    plugin_description = "Logs command calls with timing"

    __slots__ = ("_logger",)

    def __init__(self, router: Any, *, logger: Optional[logging.Logger] = None, **cfg: Any):
        self._logger = logger or logging.getLogger("blobkl")
        super().__init__(router, **cfg)

    def configure(  # type: ignore[override]
        self,
        enabled: bool = True,
        before: bool = True,
        after: bool = True,
        log: bool = True,
        print: bool = False,  # noqa: A002
    ) -> None:
        pass

    def _emit(self, message: str, cfg: Dict[str, bool]) -> None:
        if cfg["print"]:
            sys.stderr.write(message + "\n")
            return
        if cfg["log"]:
            if self._logger.hasHandlers():
                self._logger.info(message)
            else:
                sys.stderr.write(message + "\n")

    def _effective_config(self, entry_name: str) -> Dict[str, bool]:
        cfg = _DEFAULTS | self.configuration(entry_name)
        return {
            key: bool(default if cfg.get(key) is None else cfg[key])
            for key, default in _DEFAULTS.items()
        }

    def wrap_handler(self, router: Any, entry: CommandEntry, call_next: Callable) -> Callable:
        def logged(*args: Any, **kwargs: Any) -> Any:
            cfg = self._effective_config(entry.name)
            if not cfg["enabled"]:
                return call_next(*args, **kwargs)
            if cfg["before"]:
                self._emit(f"{entry.name} start", cfg)
            t0 = time.perf_counter()
            result = call_next(*args, **kwargs)
            elapsed = (time.perf_counter() - t0) * 1000
            if cfg["after"]:
                self._emit(f"{entry.name} end ({elapsed:.2f} ms)", cfg)
            return result

        return logged


CommandRouter.register_plugin(LoggingPlugin)
