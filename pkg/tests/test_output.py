"""Tests for report rendering."""

import json

import pytest

from blobkl.affine_weyl import parse_element
from blobkl.alcove import Hyperplane
from blobkl.blob_comb import OneColMultipartition
from blobkl.laurent import LaurentPoly
from blobkl.output import Report, render, to_json_value, to_text

V = LaurentPoly.monomial(1)


def _report():
    return Report(
        command="celldim",
        meta={"lambda": OneColMultipartition((0, 4)), "w": parse_element("1s", 2)},
        columns=["mu", "gdim", "h"],
        rows=[
            {
                "mu": OneColMultipartition((0, 4)),
                "gdim": LaurentPoly.one(),
                "h": Hyperplane(1, 2, 0),
            },
            {"mu": OneColMultipartition((1, 3)), "gdim": V, "h": None},
        ],
        extra={"truncation_dim": LaurentPoly.one() + V},
    )


def test_json_values():
    assert to_json_value(V + 2) == [[0, 2], [1, 1]]
    assert to_json_value({1: OneColMultipartition((2, 3))}) == {"1": [2, 3]}
    assert to_json_value((Hyperplane(1, 2, -1),)) == ["h^-1_12"]


def test_text_values():
    assert to_text(V.bar() + 2 + V) == "v^-1 + 2 + v"
    assert to_text(V.bar() + 2 + V, "tex") == "v^{-1}+2+v"
    assert to_text([1, 2]) == "1 2"
    assert to_text(True) == "true"


def test_render_json():
    payload = json.loads(render(_report(), "json"))
    assert payload["lambda"] == [0, 4]
    assert payload["w"] == str(parse_element("1s", 2))
    assert payload["rows"][1] == {"mu": [1, 3], "gdim": [[1, 1]], "h": None}
    assert payload["truncation_dim"] == [[0, 1], [1, 1]]
    assert list(payload) == ["lambda", "w", "rows", "truncation_dim"]


def test_render_csv():
    lines = render(_report(), "csv").splitlines()
    assert lines[0] == "mu,gdim,h"
    assert lines[2] == '"(1,3)",v,'
    assert len(lines) == 3


def test_render_tex():
    text = render(_report(), "tex")
    assert text.startswith("\\begin{tabular}{lll}\n")
    assert "$1$" in text
    assert "$v$" in text
    assert "$\\mathfrak{h}^{0}_{1,2}$" in text
    assert text.endswith("\\end{tabular}\n")


def test_render_plain():
    text = render(_report(), "plain")
    lines = text.splitlines()
    assert lines[0] == f"lambda = {OneColMultipartition((0, 4))}"
    assert lines[2] == ""
    assert lines[3] == "mu  gdim  h"


def test_render_is_deterministic():
    assert render(_report(), "json") == render(_report(), "json")


def test_unknown_format():
    with pytest.raises(ValueError):
        render(_report(), "yaml")
