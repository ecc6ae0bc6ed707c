"""Text and JSON serialisation of matrices.

Text form: one row per nonblank line, whitespace-separated tokens, ``E``
for ε, signed decimal integers otherwise — so fixture tables are
copy-paste-able.  JSON form: ``{"rows": m, "cols": n, "entries": [[...]]}``
with ε encoded as the string ``"E"`` (never null, which is too easy to
produce by accident).  ``parse_matrix(format_matrix(M)) == M`` for every
matrix; column alignment is cosmetic only.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Union

from .errors import BadToken, Empty, MinPlusError, RaggedRows
from .matrix import Matrix
from .semiring import TropicalScalar


@dataclass(frozen=True)
class MatrixDocument:
    """A parsed matrix plus the name of where it came from."""

    matrix: Matrix
    source_name: Optional[str] = None


def parse_matrix(text: str) -> Matrix:
    """Parse the text form; tolerant of CRLF, blank lines, and stray spaces."""
    parsed = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        row = []
        for token in tokens:
            try:
                row.append(TropicalScalar.parse(token))
            except BadToken as exc:
                raise BadToken(f"line {lineno}: {exc}") from None
        parsed.append((lineno, row))
    if not parsed:
        raise Empty("no rows found")
    width = len(parsed[0][1])
    for lineno, row in parsed[1:]:
        if len(row) != width:
            raise RaggedRows(f"line {lineno} has {len(row)} entries, expected {width}")
    return Matrix.from_rows([row for _, row in parsed])


def matrix_json_obj(matrix: Matrix) -> dict:
    """The JSON-ready dict form of a matrix (ε as the string "E")."""
    entries = [
        ["E" if s.is_epsilon else s.value for s in row] for row in matrix.to_rows()
    ]
    return {"rows": matrix.rows, "cols": matrix.cols, "entries": entries}


def format_matrix(matrix: Matrix, fmt: str = "text") -> str:
    """Render a matrix as text (columns right-aligned) or compact JSON."""
    if fmt == "text":
        tokens = [[str(s) for s in row] for row in matrix.to_rows()]
        widths = [max(len(row[j]) for row in tokens) for j in range(matrix.cols)]
        return "\n".join(
            " ".join(tok.rjust(w) for tok, w in zip(row, widths)) for row in tokens
        )
    if fmt == "json":
        return json.dumps(matrix_json_obj(matrix), separators=(",", ":"))
    raise ValueError(f"format must be 'text' or 'json', got {fmt!r}")


def load_matrix(source: Union[str, os.PathLike]) -> MatrixDocument:
    """Read a text-form matrix from a file path, or from stdin for ``-``."""
    if source == "-":
        return MatrixDocument(parse_matrix(sys.stdin.read()), "<stdin>")
    path = os.fspath(source)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return MatrixDocument(parse_matrix(text), path)
    except MinPlusError as exc:
        raise type(exc)(f"{path}: {exc}") from None
