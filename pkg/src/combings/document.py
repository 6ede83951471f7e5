"""Structured text documents for the CLI.

A document is a JSON object with a fixed key order and exact "p/q" rational
strings.  emit(parse(text)) reproduces canonical input byte for byte.

Keys: linking_matrix (required, list of integer rows), combing {c, gamma},
combing2 (second combing for the comparison commands), meridian (integer
list for linking-form), framed {lambda_matrix, classes}, lambda (rational
string).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

_RATIONAL_RE = re.compile(r"-?\d+(/[1-9]\d*)?\Z")

_TOP_KEYS = ("linking_matrix", "combing", "combing2", "meridian", "framed", "lambda")


@dataclass(frozen=True)
class CombingDoc:
    c: tuple[int, ...]
    gamma: int


@dataclass(frozen=True)
class FramedDoc:
    lambda_matrix: tuple[tuple[Fraction, ...], ...]
    classes: tuple[tuple[int, ...], ...] | None


@dataclass(frozen=True)
class Document:
    linking_matrix: tuple[tuple[int, ...], ...]
    combing: CombingDoc | None = None
    combing2: CombingDoc | None = None
    meridian: tuple[int, ...] | None = None
    framed: FramedDoc | None = None
    casson_walker: Fraction | None = None


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational 'p/q' string: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def _expect_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where} must be an integer, got {value!r}")
    return value


def _parse_int_vector(value, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise ParseError(f"{where} must be a list of integers")
    return tuple(_expect_int(x, where) for x in value)


def _parse_int_matrix(value, where: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list):
        raise ParseError(f"{where} must be a list of rows")
    rows = tuple(_parse_int_vector(row, where) for row in value)
    width = len(rows[0]) if rows else 0
    if any(len(r) != width for r in rows):
        raise ParseError(f"{where} has ragged rows")
    return rows


def _parse_combing(value, where: str) -> CombingDoc:
    if not isinstance(value, dict):
        raise ParseError(f"{where} must be an object with keys c and gamma")
    unknown = set(value) - {"c", "gamma"}
    if unknown:
        raise ParseError(f"{where} has unknown keys: {sorted(unknown)}")
    if "c" not in value or "gamma" not in value:
        raise ParseError(f"{where} needs both c and gamma")
    return CombingDoc(
        c=_parse_int_vector(value["c"], f"{where}.c"),
        gamma=_expect_int(value["gamma"], f"{where}.gamma"),
    )


def _parse_framed(value) -> FramedDoc:
    if not isinstance(value, dict):
        raise ParseError("framed must be an object")
    unknown = set(value) - {"lambda_matrix", "classes"}
    if unknown:
        raise ParseError(f"framed has unknown keys: {sorted(unknown)}")
    if "lambda_matrix" not in value:
        raise ParseError("framed needs lambda_matrix")
    raw = value["lambda_matrix"]
    if not isinstance(raw, list):
        raise ParseError("framed.lambda_matrix must be a list of rows")
    rows = []
    for row in raw:
        if not isinstance(row, list):
            raise ParseError("framed.lambda_matrix must be a list of rows")
        rows.append(tuple(parse_rational(x) for x in row))
    matrix = tuple(rows)
    width = len(matrix[0]) if matrix else 0
    if any(len(r) != width for r in matrix):
        raise ParseError("framed.lambda_matrix has ragged rows")
    classes = None
    if "classes" in value:
        classes = _parse_int_matrix(value["classes"], "framed.classes")
    return FramedDoc(lambda_matrix=matrix, classes=classes)


def parse_document(text: str) -> Document:
    """Parse and validate a document; raises ParseError on any defect."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(obj) - set(_TOP_KEYS)
    if unknown:
        raise ParseError(f"unknown document keys: {sorted(unknown)}")
    if "linking_matrix" not in obj:
        raise ParseError("document needs linking_matrix")

    matrix = _parse_int_matrix(obj["linking_matrix"], "linking_matrix")
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ParseError("linking_matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise ParseError("linking_matrix must be symmetric")

    return Document(
        linking_matrix=matrix,
        combing=_parse_combing(obj["combing"], "combing") if "combing" in obj else None,
        combing2=(
            _parse_combing(obj["combing2"], "combing2") if "combing2" in obj else None
        ),
        meridian=(
            _parse_int_vector(obj["meridian"], "meridian")
            if "meridian" in obj
            else None
        ),
        framed=_parse_framed(obj["framed"]) if "framed" in obj else None,
        casson_walker=parse_rational(obj["lambda"]) if "lambda" in obj else None,
    )


def document_to_obj(doc: Document) -> dict:
    """Canonical plain-JSON form of a document (fixed key order)."""
    obj: dict = {"linking_matrix": [list(row) for row in doc.linking_matrix]}
    for key, combing in (("combing", doc.combing), ("combing2", doc.combing2)):
        if combing is not None:
            obj[key] = {"c": list(combing.c), "gamma": combing.gamma}
    if doc.meridian is not None:
        obj["meridian"] = list(doc.meridian)
    if doc.framed is not None:
        framed: dict = {
            "lambda_matrix": [
                [format_rational(x) for x in row] for row in doc.framed.lambda_matrix
            ]
        }
        if doc.framed.classes is not None:
            framed["classes"] = [list(v) for v in doc.framed.classes]
        obj["framed"] = framed
    if doc.casson_walker is not None:
        obj["lambda"] = format_rational(doc.casson_walker)
    return obj


def emit_document(doc: Document) -> str:
    return json.dumps(document_to_obj(doc), indent=2) + "\n"
