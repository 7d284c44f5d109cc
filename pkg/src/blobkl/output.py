"""Rendering of command results.

Every command returns a :class:`Report`: ordered scalar ``meta`` fields, a
table of ``rows`` and optional JSON-only ``extra`` sections. ``render``
turns it into one of four formats:

- ``json``: ``{**meta, "rows": [...], **extra}``. Polynomials are
  ``[[exponent, coefficient], ...]`` and multipartitions are lists of heights.
- ``csv``: the rows only, with a header line.
- ``tex``: a ``tabular`` of the rows with polynomials in ``fmt("tex")``.
- ``plain``: ``key = value`` lines for ``meta`` and then one line per row.

Output is a pure function of the report, so identical inputs give
byte-identical text.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

from blobkl.affine_weyl import AffineElement, DihedralForm
from blobkl.alcove import Hyperplane
from blobkl.blob_comb import ColumnTableau, OneColMultipartition
from blobkl.laurent import LaurentPoly

__all__ = ["Report", "render", "to_json_value", "to_text"]


@dataclass
class Report:
    command: str
    meta: Dict[str, Any] = field(default_factory=dict)
    columns: List[str] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0


# ----------------------------------------------------------------------
# Value conversion
# ----------------------------------------------------------------------
def to_json_value(value: Any) -> Any:
    if isinstance(value, LaurentPoly):
        return value.to_json()
    if isinstance(value, OneColMultipartition):
        return list(value.heights)
    if isinstance(value, ColumnTableau):
        return list(value.components)
    if isinstance(value, (AffineElement, DihedralForm, Hyperplane)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    return value


def to_text(value: Any, style: str = "plain") -> str:
    if value is None:
        return ""
    if isinstance(value, LaurentPoly):
        return value.fmt(style)
    if isinstance(value, Hyperplane):
        return value.fmt(style)
    if isinstance(value, (list, tuple)):
        return " ".join(to_text(v, style) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


# ----------------------------------------------------------------------
# Formats
# ----------------------------------------------------------------------
def _render_json(report: Report) -> str:
    payload: Dict[str, Any] = {key: to_json_value(v) for key, v in report.meta.items()}
    payload["rows"] = [
        {key: to_json_value(row.get(key)) for key in report.columns} for row in report.rows
    ]
    for key, value in report.extra.items():
        payload[key] = to_json_value(value)
    return json.dumps(payload, indent=2) + "\n"


def _render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([to_text(row.get(key)) for key in report.columns])
    return buffer.getvalue()


def _tex_escape(text: str) -> str:
    return text.replace("_", "\\_")


def _render_tex(report: Report) -> str:
    lines = ["\\begin{tabular}{" + "l" * max(len(report.columns), 1) + "}"]
    lines.append(" & ".join(_tex_escape(c) for c in report.columns) + " \\\\")
    lines.append("\\hline")
    for row in report.rows:
        cells = []
        for key in report.columns:
            value = row.get(key)
            text = to_text(value, "tex")
            cells.append(f"${text}$" if isinstance(value, (LaurentPoly, Hyperplane)) else text)
        lines.append(" & ".join(cells) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _render_plain(report: Report) -> str:
    lines = [f"{key} = {to_text(value)}" for key, value in report.meta.items()]
    if report.rows:
        if lines:
            lines.append("")
        lines.append("  ".join(report.columns))
        for row in report.rows:
            lines.append("  ".join(to_text(row.get(key)) for key in report.columns))
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "json": _render_json,
    "csv": _render_csv,
    "tex": _render_tex,
    "plain": _render_plain,
}


def render(report: Report, fmt: str = "json") -> str:
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise ValueError(f"Unknown output format: {fmt!r}") from None
    return renderer(report)
