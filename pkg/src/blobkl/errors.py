"""Exception hierarchy shared by every computation module.

Two families are kept apart because the command line maps them to different
exit codes:

- ``InputError`` (exit 2): the caller supplied something the computation
  cannot accept (non-regular multipartition, wrong level, bad multicharge).
  These also subclass ``ValueError`` so generic callers can catch them.
- ``ConsistencyError`` (exit 3): an internal identity failed. These carry the
  full ``instance`` that reproduces the failure and subclass ``ArithmeticError``.

``UnsupportedError`` marks requests that are well-formed but outside what the
engine computes (p-canonical tables for level > 2).
"""

from __future__ import annotations

from typing import Any, Dict, Optional

__all__ = [
    "BlobKLError",
    "InputError",
    "LevelMismatch",
    "NotRegular",
    "SizeMismatch",
    "ShapeMismatch",
    "ResidueMismatch",
    "NotApplicable",
    "TooShort",
    "CapExceeded",
    "InvalidParameters",
    "UnsupportedError",
    "ConsistencyError",
    "DecompositionError",
    "MultipleNewHyperplanes",
    "AlcoveAdjacencyError",
]


class BlobKLError(Exception):
    """Root of every error raised on purpose by blobkl."""


class InputError(BlobKLError, ValueError):
    """Rejected input."""


class LevelMismatch(InputError):
    pass


class NotRegular(InputError):
    pass


class SizeMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class ResidueMismatch(InputError):
    pass


class NotApplicable(InputError):
    pass


class TooShort(InputError):
    pass


class CapExceeded(InputError):
    """Enumeration would exceed the configured tableau cap."""

    def __init__(self, message: str, *, cap: int) -> None:
        super().__init__(message)
        self.cap = cap


class InvalidParameters(InputError):
    pass


class UnsupportedError(BlobKLError, NotImplementedError):
    pass


class ConsistencyError(BlobKLError, ArithmeticError):
    """An identity that must hold did not; ``instance`` reproduces it."""

    def __init__(self, message: str, *, instance: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.instance: Dict[str, Any] = dict(instance or {})


class DecompositionError(ConsistencyError):
    pass


class MultipleNewHyperplanes(ConsistencyError):
    pass


class AlcoveAdjacencyError(ConsistencyError):
    pass
