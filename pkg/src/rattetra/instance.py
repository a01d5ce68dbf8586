"""Instance files: a JSON document naming the field, the form and four points.

::

    {
      "field": "rational",
      "form": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
      "points": [["0", "0", "0"], ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    }

Every scalar is a string in the field's literal syntax (``-?n`` or ``-?n/d``
over Q, ``-?n`` over F_p).  ``field`` is ``rational`` or ``prime:<p>``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .errors import ParseError
from .field import FieldSpec
from .form import SymForm
from .tetra import Point3, Tetrahedron


def _grid(doc: Any, key: str, rows: int) -> list:
    grid = doc.get(key)
    if (
        not isinstance(grid, list)
        or len(grid) != rows
        or any(not isinstance(r, list) or len(r) != 3 for r in grid)
    ):
        raise ParseError(f"'{key}' must be {rows} rows of 3 scalar strings")
    for row in grid:
        for x in row:
            if not isinstance(x, str):
                raise ParseError(f"'{key}' entries must be strings, got {x!r}")
    return grid


def from_dict(doc: Any) -> Tetrahedron:
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object")
    if not isinstance(doc.get("field"), str):
        raise ParseError("'field' must be a string")
    spec = FieldSpec.from_text(doc["field"])
    form = SymForm.from_matrix([[spec.parse(x) for x in row] for row in _grid(doc, "form", 3)])
    points = tuple(Point3(*(spec.parse(x) for x in row)) for row in _grid(doc, "points", 4))
    return Tetrahedron(points, form)


def loads(text: str) -> Tetrahedron:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return from_dict(doc)


def load(path: Union[str, Path]) -> Tetrahedron:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text)


def to_dict(T: Tetrahedron) -> dict:
    fmt = T.spec.format
    return {
        "field": str(T.spec),
        "form": [[fmt(x) for x in row] for row in T.form.matrix],
        "points": [[fmt(c) for c in P] for P in T.points],
    }


def dumps(T: Tetrahedron) -> str:
    d = to_dict(T)
    rows = lambda grid: ",\n".join("    " + json.dumps(r) for r in grid)
    return (
        "{\n"
        f'  "field": {json.dumps(d["field"])},\n'
        f'  "form": [\n{rows(d["form"])}\n  ],\n'
        f'  "points": [\n{rows(d["points"])}\n  ]\n'
        "}\n"
    )
