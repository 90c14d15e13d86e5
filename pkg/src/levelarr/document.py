"""JSON arrangement documents: exact rationals, lossless round trips.

Rationals are serialized as plain integers when possible and as lowest-terms
strings like ``"3/2"`` otherwise; floats are rejected on input.  Parsing
canonicalizes hyperplanes, so parse -> serialize -> parse is the identity on
parsed values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .arrangement import Arrangement, Hyperplane


class DocumentError(ValueError):
    """Malformed arrangement document; the message names the offending field."""


def scalar_to_json(value: Union[int, Fraction]) -> Union[int, str]:
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def scalar_from_json(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"{where}: expected an integer or rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: not a rational: {value!r} ({exc})") from None
    raise DocumentError(f"{where}: expected an integer or rational string, got {type(value).__name__}")


@dataclass(frozen=True)
class ParsedDocument:
    arrangement: Arrangement
    labels: tuple[str, ...]


def parse_document(doc: dict) -> ParsedDocument:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if "ambient_dim" not in doc:
        raise DocumentError("ambient_dim: missing")
    dim = doc["ambient_dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DocumentError(f"ambient_dim: expected a positive integer, got {dim!r}")
    raw_planes = doc.get("hyperplanes", [])
    if not isinstance(raw_planes, list):
        raise DocumentError("hyperplanes: expected a list")

    planes = []
    for idx, entry in enumerate(raw_planes):
        where = f"hyperplanes[{idx}]"
        if not isinstance(entry, dict):
            raise DocumentError(f"{where}: expected an object")
        normal = entry.get("normal")
        if not isinstance(normal, list) or len(normal) != dim:
            raise DocumentError(f"{where}.normal: expected a list of {dim} rationals")
        coords = [scalar_from_json(v, f"{where}.normal[{j}]") for j, v in enumerate(normal)]
        offset = scalar_from_json(entry.get("offset", 0), f"{where}.offset")
        try:
            planes.append(Hyperplane(coords, offset))
        except ValueError as exc:
            raise DocumentError(f"{where}: {exc}") from None

    labels = doc.get("labels")
    if labels is None:
        labels = tuple(f"H{i + 1}" for i in range(len(planes)))
    else:
        if not isinstance(labels, list) or len(labels) != len(planes):
            raise DocumentError("labels: expected one label per hyperplane")
        if not all(isinstance(s, str) for s in labels):
            raise DocumentError("labels: expected strings")
        labels = tuple(labels)

    kind = doc.get("kind")
    if kind is not None and kind not in ("typeA", "typeB", "general"):
        raise DocumentError(f"kind: expected typeA|typeB|general, got {kind!r}")

    try:
        arr = Arrangement(dim, planes)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    return ParsedDocument(arr, labels)


def document_of(arr: Arrangement, labels: Optional[tuple[str, ...]] = None) -> dict:
    doc = {
        "ambient_dim": arr.dim,
        "hyperplanes": [
            {
                "normal": [scalar_to_json(c) for c in h.normal],
                "offset": scalar_to_json(h.offset),
            }
            for h in arr.hyperplanes
        ],
        "kind": arr.kind.value,
    }
    if labels is not None:
        doc["labels"] = list(labels)
    return doc


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads_document(text: str) -> ParsedDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return parse_document(raw)
