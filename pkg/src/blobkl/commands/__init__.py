"""Command layer: routers that bind methods as named commands.

- ``base_router`` -> ``BaseCommandRouter`` (plugin-free engine)
- ``router`` -> ``CommandRouter`` (plugin pipeline)
- ``decorators`` -> ``command`` marker
- ``routed`` -> ``CommandSet`` mixin
"""

from .base_router import BaseCommandRouter
from .decorators import command
from .routed import CommandSet
from .router import CommandRouter

__all__ = ["BaseCommandRouter", "CommandRouter", "CommandSet", "command"]
