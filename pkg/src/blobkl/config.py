"""Run configuration.

``resolve_options`` merges explicit options over the defaults with
``SmartOptions``; ``BLOBKL_CAP`` in the environment replaces the default
enumeration cap. ``RunConfig`` validates the merged mapping. Parameters are
checked as each field is read: a non-adjacency-free ``kappa`` or a composite
``p`` fails validation with the flag in the error location, before any
computation starts.
"""

from __future__ import annotations

import os
from typing import Any, Dict, Literal, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator
from smartseeds import SmartOptions

from blobkl.blob_comb import DEFAULT_CAP, BlobParams, OneColMultipartition
from blobkl.errors import InputError
from blobkl.hecke import is_prime

__all__ = ["DEFAULTS", "CAP_ENV", "SUBCOMMANDS", "FORMATS", "RunConfig", "resolve_options"]

CAP_ENV = "BLOBKL_CAP"

SUBCOMMANDS = ("kl", "pkl", "bs", "tableaux", "celldim", "alcove", "decomp", "verify")
FORMATS = ("json", "csv", "tex", "plain")

DEFAULTS: Dict[str, Any] = {
    "cap": DEFAULT_CAP,
    "format": "json",
    "seed": 0,
    "instances": 200,
    "workers": 1,
    "strategy": "highest",
    "l": 2,
    "p": 0,
}


def _env_defaults(env: Mapping[str, str]) -> Dict[str, Any]:
    defaults = dict(DEFAULTS)
    raw = env.get(CAP_ENV)
    if raw:
        try:
            defaults["cap"] = int(raw)
        except ValueError as exc:
            raise InputError(f"{CAP_ENV}={raw!r} is not an integer") from exc
    return defaults


def resolve_options(
    options: Mapping[str, Any], env: Optional[Mapping[str, str]] = None
) -> Dict[str, Any]:
    """Explicit options over ``BLOBKL_CAP`` over ``DEFAULTS``; ``None`` means unset."""
    defaults = _env_defaults(os.environ if env is None else env)
    given = {key: value for key, value in options.items() if value is not None}
    opts = SmartOptions(given, defaults=defaults)
    merged = dict(given)
    for key in defaults:
        merged[key] = getattr(opts, key)
    return merged


def _parse_ints(value: Any) -> Any:
    if isinstance(value, str):
        text = value.strip().strip("()[]")
        try:
            return tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise ValueError(f"expected comma-separated integers, got {value!r}") from exc
    return value


class RunConfig(BaseModel):
    """Validated options of one CLI invocation."""

    model_config = ConfigDict(populate_by_name=True, frozen=True, extra="forbid")

    subcommand: Literal["kl", "pkl", "bs", "tableaux", "celldim", "alcove", "decomp", "verify"]
    e: Optional[int] = Field(default=None, ge=2)
    l: int = Field(default=2, ge=1)
    kappa: Optional[Tuple[int, ...]] = None
    n: Optional[int] = Field(default=None, ge=0)
    lam: Optional[Tuple[int, ...]] = Field(default=None, alias="lambda")
    mu: Optional[Tuple[int, ...]] = None
    w: Optional[str] = None
    p: int = Field(default=0, ge=0)
    word: Optional[str] = None
    seed: int = 0
    cap: int = Field(default=DEFAULT_CAP, ge=1)
    format: Literal["json", "csv", "tex", "plain"] = "json"
    suite: Optional[str] = None
    instances: int = Field(default=200, ge=1)
    cross_check: bool = False
    strategy: Literal["highest", "lowest"] = "highest"
    workers: int = Field(default=1, ge=1)
    count_only: bool = False

    @field_validator("kappa", "lam", "mu", mode="before")
    @classmethod
    def _split_lists(cls, value: Any) -> Any:
        return _parse_ints(value)

    @field_validator("p")
    @classmethod
    def _prime_or_zero(cls, value: int) -> int:
        if value != 0 and not is_prime(value):
            raise ValueError(f"p must be 0 or a prime, got {value}")
        return value

    @field_validator("kappa")
    @classmethod
    def _adjacency_free(cls, value: Optional[Tuple[int, ...]], info: ValidationInfo) -> Any:
        if value is None:
            return value
        e, l = info.data.get("e"), info.data.get("l", 2)
        if len(value) != l:
            raise ValueError(f"kappa has {len(value)} entries, expected l = {l}")
        if e is not None:
            try:
                BlobParams(e, l, value)
            except InputError as exc:
                raise ValueError(str(exc)) from exc
        return value

    @field_validator("lam", "mu")
    @classmethod
    def _level(cls, value: Optional[Tuple[int, ...]], info: ValidationInfo) -> Any:
        if value is None:
            return value
        l = info.data.get("l", 2)
        if len(value) != l:
            raise ValueError(f"expected {l} column heights, got {len(value)}")
        if any(h < 0 for h in value):
            raise ValueError(f"column heights must be nonnegative, got {list(value)}")
        return value

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    def require(self, *names: str) -> None:
        """Raise ``InputError`` naming the first missing flag."""
        for name in names:
            if getattr(self, name) is None:
                flag = "lambda" if name == "lam" else name.replace("_", "-")
                raise InputError(f"--{flag} is required for {self.subcommand}")

    def params(self) -> BlobParams:
        self.require("e", "kappa")
        assert self.e is not None and self.kappa is not None
        return BlobParams(self.e, self.l, self.kappa)

    def multipartition(self) -> OneColMultipartition:
        self.require("lam")
        assert self.lam is not None
        return OneColMultipartition(self.lam)

    def second_multipartition(self) -> OneColMultipartition:
        self.require("mu")
        assert self.mu is not None
        return OneColMultipartition(self.mu)

    def dump(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)
