"""Matrix and vector file parsing.

Two formats: CSV (one row per line, cells either decimal or a rational
literal "p/q") and JSON ({"n": ..., "entries": [[...]]}; vectors may also
be a bare JSON list).  Rational literals force the exact backend; plain
decimals parse as floats unless backend="exact" is requested, in which
case they become exact decimal fractions.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from .errors import ParseError
from .matrix import ReciprocalMatrix, Scalar, Vector, check_positive_vector, validate_reciprocal


def parse_scalar(cell, backend: Optional[str] = None) -> Scalar:
    """Parse a single cell: int, "p/q", or decimal."""
    if isinstance(cell, str):
        text = cell.strip()
        try:
            if "/" in text:
                return Fraction(text)
            if "." in text or "e" in text.lower():
                return Fraction(text) if backend == "exact" else float(text)
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot parse cell {cell!r}: {exc}") from exc
    if isinstance(cell, bool):
        raise ParseError(f"cannot parse cell {cell!r}")
    if isinstance(cell, int):
        return Fraction(cell)
    if isinstance(cell, float):
        return Fraction(cell).limit_denominator(10**12) if backend == "exact" else cell
    raise ParseError(f"cannot parse cell {cell!r}")


def _coerce_backend(values, backend: Optional[str]):
    if backend == "float":
        return [float(x) for x in values]
    return values


def _parse_csv_rows(text: str, backend: Optional[str]):
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(
            _coerce_backend(
                [parse_scalar(c, backend) for c in line.split(",")], backend
            )
        )
    if not rows:
        raise ParseError("no data rows found")
    return rows


def parse_matrix_text(
    text: str, backend: Optional[str] = None
) -> ReciprocalMatrix:
    text_stripped = text.lstrip()
    if text_stripped.startswith("{") or text_stripped.startswith("["):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        entries = obj["entries"] if isinstance(obj, dict) else obj
        rows = [
            _coerce_backend([parse_scalar(c, backend) for c in row], backend)
            for row in entries
        ]
        if isinstance(obj, dict) and "n" in obj and obj["n"] != len(rows):
            raise ParseError(f"declared n={obj['n']} but found {len(rows)} rows")
    else:
        rows = _parse_csv_rows(text, backend)
    return validate_reciprocal(rows)


def parse_vector_text(text: str, backend: Optional[str] = None) -> Vector:
    text_stripped = text.lstrip()
    if text_stripped.startswith("{") or text_stripped.startswith("["):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        entries = obj["entries"] if isinstance(obj, dict) else obj
        vals = [parse_scalar(c, backend) for c in entries]
    else:
        rows = _parse_csv_rows(text, backend)
        if len(rows) == 1:
            vals = rows[0]
        elif all(len(r) == 1 for r in rows):
            vals = [r[0] for r in rows]
        else:
            raise ParseError("vector file must be a single CSV row or column")
    return check_positive_vector(_coerce_backend(vals, backend))


def load_matrix(path: Union[str, Path], backend: Optional[str] = None) -> ReciprocalMatrix:
    return parse_matrix_text(Path(path).read_text(), backend)


def load_vector(path: Union[str, Path], backend: Optional[str] = None) -> Vector:
    return parse_vector_text(Path(path).read_text(), backend)


def scalar_repr(x: Scalar):
    """JSON-friendly value: rationals as "p/q" strings, floats as-is."""
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x
