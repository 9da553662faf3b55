"""Readers for the plain-text input files.

Points file: one point per line, ``n`` comma-separated element indices.
Values file: element indices separated by commas or whitespace.
Custom order file: every exponent vector of the box, largest first, one
per line, comma-separated.  ``#`` starts a comment in all three formats.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidPoints
from .field import FiniteField
from .orders import MonomialOrder, get_order
from .vanishing import PointSet


def _data_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_points(text: str, field: FiniteField, n: int) -> PointSet:
    rows = []
    for lineno, line in _data_lines(text):
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != n:
            raise InvalidPoints(f"line {lineno}: expected {n} coordinates, got {len(parts)}")
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise InvalidPoints(f"line {lineno}: coordinates must be integers") from None
        if any(not 0 <= c < field.q for c in row):
            raise InvalidPoints(f"line {lineno}: coordinate outside F_{field.q}")
        rows.append(row)
    if not rows:
        raise InvalidPoints("points file contains no points")
    return PointSet(rows, field, n)


def read_points(path, field: FiniteField, n: int) -> PointSet:
    return parse_points(Path(path).read_text(), field, n)


def parse_values(text: str, field: FiniteField) -> list:
    out = []
    for lineno, line in _data_lines(text):
        for tok in line.replace(",", " ").split():
            try:
                v = int(tok)
            except ValueError:
                raise ValueError(f"line {lineno}: {tok!r} is not an integer") from None
            if not 0 <= v < field.q:
                raise ValueError(f"line {lineno}: value {v} outside F_{field.q}")
            out.append(v)
    return out


def read_values(path, field: FiniteField) -> list:
    return parse_values(Path(path).read_text(), field)


def parse_custom_order(text: str) -> MonomialOrder:
    vectors = []
    for lineno, line in _data_lines(text):
        try:
            vectors.append(tuple(int(p) for p in line.split(",")))
        except ValueError:
            raise ValueError(f"line {lineno}: malformed exponent vector") from None
    return MonomialOrder.custom(vectors)


def resolve_order(spec: str) -> MonomialOrder:
    """``lex``, ``grlex``, ``grevlex`` or ``custom:<path>``."""
    if spec.startswith("custom:"):
        return parse_custom_order(Path(spec[len("custom:"):]).read_text())
    return get_order(spec)
