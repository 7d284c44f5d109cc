"""Validate command arguments with pydantic.

At registration the plugin builds a model from the command's type hints
(``create_model("<func>_Model", ...)``); parameters without a hint are passed
through untouched. At call time the bound arguments are validated and the
coerced values forwarded, so a command annotated ``config: RunConfig`` may be
called with a plain dict.

A failure is re-raised as ``ValidationError`` titled
``"Validation error in <command>"``. ``disabled=True`` turns validation off
for the router or for one command.
"""

from __future__ import annotations

import inspect
from typing import Any, Callable, Dict, get_type_hints

from pydantic import ValidationError, create_model

from blobkl.commands.router import CommandRouter
from blobkl.plugins._base_plugin import BasePlugin, CommandEntry


class PydanticPlugin(BasePlugin):
    plugin_code = "pydantic"
    plugin_description = "Validates command inputs using type hints"

    def configure(self, disabled: bool = False) -> None:  # type: ignore[override]
        pass

    def on_decore(self, router: Any, func: Callable, entry: CommandEntry) -> None:
        try:
            hints = get_type_hints(func)
        except Exception:
            return
        hints.pop("return", None)
        if not hints:
            return
        sig = inspect.signature(func)
        fields: Dict[str, Any] = {}
        for param_name, hint in hints.items():
            param = sig.parameters.get(param_name)
            if param is None:
                raise ValueError(
                    f"Command '{func.__name__}' hints '{param_name}', "
                    f"which is not in its signature"
                )
            default = ... if param.default is inspect.Parameter.empty else param.default
            fields[param_name] = (hint, default)
        model = create_model(f"{func.__name__}_Model", **fields)  # type: ignore[call-overload]
        entry.metadata["pydantic"] = {"model": model, "hints": hints, "signature": sig}

    def wrap_handler(self, router: Any, entry: CommandEntry, call_next: Callable) -> Callable:
        meta = entry.metadata.get("pydantic", {})
        model = meta.get("model")
        if not model:
            return call_next
        sig = meta["signature"]
        hints = meta["hints"]

        def validated(*args: Any, **kwargs: Any) -> Any:
            if self.configuration(entry.name).get("disabled"):
                return call_next(*args, **kwargs)
            bound = sig.bind(*args, **kwargs)
            bound.apply_defaults()
            checked = {k: v for k, v in bound.arguments.items() if k in hints}
            final_args = {k: v for k, v in bound.arguments.items() if k not in hints}
            try:
                instance = model(**checked)
            except ValidationError as exc:
                raise ValidationError.from_exception_data(
                    title=f"Validation error in {entry.name}",
                    line_errors=exc.errors(),  # type: ignore[arg-type]
                ) from exc
            for key, value in instance:
                final_args[key] = value
            return call_next(**final_args)

        return validated

    def entry_metadata(self, router: Any, entry: CommandEntry) -> Dict[str, Any]:
        meta = entry.metadata.get("pydantic", {})
        if not meta:
            return {}
        return {"model": meta["model"].__name__, "hints": sorted(meta["hints"])}


CommandRouter.register_plugin(PydanticPlugin)
