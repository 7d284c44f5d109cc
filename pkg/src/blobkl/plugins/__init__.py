"""Command router plugins.

Concrete plugins (``logging``, ``pydantic``) register themselves when
imported; ``blobkl/__init__`` imports them eagerly.
"""

__all__: list[str] = []
