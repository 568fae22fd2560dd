"""JSON sequence documents.

A document looks like::

    {"ring": "Q", "terms": [1, "-1/2", "3"], "convention": "egf-terms", "length": 3}

``ring`` and ``terms`` are required; ``convention`` (only ``"egf-terms"``)
and ``length`` (must match the number of terms) are optional; any other key
is rejected. Terms are JSON integers or literal strings in the grammar of
:mod:`hurwitz.literals`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import ParseError, RingMismatch
from .literals import parse_literal
from .rings import IntegersMod, Integers, Rationals, Ring, RingValue, parse_ring
from .series import Seq

CONVENTION = "egf-terms"
_KEYS = {"ring", "terms", "convention", "length"}


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _parse_term(raw, ring: Ring, index: int) -> RingValue:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise ParseError(f"term {index}: expected an integer or a string, got {raw!r}")
    if isinstance(raw, int):
        return ring.from_integer(raw)
    try:
        return parse_literal(raw, ring)
    except ParseError as exc:
        raise ParseError(f"term {index} ({raw!r}): {exc}", column=exc.column) from None
    except RingMismatch as exc:
        raise RingMismatch(exc.left, exc.right, f"term {index}") from None


def parse_seq(document: str | dict) -> Seq:
    """Parse a document (JSON text or an already-decoded dict) into a :class:`Seq`."""
    doc = _load_json(document) if isinstance(document, str) else document
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(doc) - _KEYS
    if unknown:
        raise ParseError(f"unknown fields: {', '.join(sorted(unknown))}")
    for key in ("ring", "terms"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    if doc.get("convention", CONVENTION) != CONVENTION:
        raise ParseError(f"unsupported convention {doc['convention']!r}")
    if not isinstance(doc["ring"], str):
        raise ParseError("ring must be a descriptor string")
    try:
        ring = parse_ring(doc["ring"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    terms = doc["terms"]
    if not isinstance(terms, list) or not terms:
        raise ParseError("terms must be a non-empty list")
    if "length" in doc and doc["length"] != len(terms):
        raise ParseError(f"length {doc['length']} does not match {len(terms)} terms")
    return Seq(ring, [_parse_term(t, ring, i) for i, t in enumerate(terms)])


def _term_to_json(v: RingValue):
    if isinstance(v.ring, (Integers, IntegersMod)):
        return v.payload
    if isinstance(v.ring, Rationals):
        q: Fraction = v.payload
        return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    return str(v)


def serialize_seq(seq: Seq) -> dict:
    """Canonical document for ``seq``; ``parse_seq`` inverts it exactly."""
    return {
        "ring": str(seq.ring),
        "convention": CONVENTION,
        "length": len(seq),
        "terms": [_term_to_json(t) for t in seq.terms],
    }


def dumps_seq(seq: Seq) -> str:
    return json.dumps(serialize_seq(seq))


def load_seq(path: str | Path) -> Seq:
    return parse_seq(Path(path).read_text(encoding="utf-8"))


def save_seq(seq: Seq, path: str | Path) -> None:
    Path(path).write_text(dumps_seq(seq) + "\n", encoding="utf-8")
