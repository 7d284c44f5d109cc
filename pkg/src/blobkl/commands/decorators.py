"""Marker decorator for command methods.

``command(router, *, name=None, help="", flags=(), **kwargs)`` appends a
payload ``{"name": router, ...}`` to the function's ``TARGET_ATTR_NAME``
list and returns the function unchanged. Routers pick the payloads up when
they are constructed; nothing is registered at decoration time.

``flags`` names the CLI options a command reads, in the order they appear in
``--help``.
"""

from __future__ import annotations

from typing import Any, Callable, Optional, Sequence

from blobkl.commands.base_router import TARGET_ATTR_NAME

__all__ = ["command"]


def command(
    router: str,
    *,
    name: Optional[str] = None,
    help: str = "",  # noqa: A002 - mirrors argparse
    flags: Sequence[str] = (),
    **kwargs: Any,
) -> Callable:
    def decorator(func: Callable) -> Callable:
        markers = list(getattr(func, TARGET_ATTR_NAME, []))
        payload = {"name": router, "help": help, "flags": tuple(flags)}
        if name is not None:
            payload["entry_name"] = name
        payload.update(kwargs)
        markers.append(payload)
        setattr(func, TARGET_ATTR_NAME, markers)
        return func

    return decorator
