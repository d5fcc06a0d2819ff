"""Report emission and the JSON schemas printed by ``--schema``.

Reports are UTF-8 JSON with sorted keys, two-space indentation and a
trailing newline, so equal payloads give byte-identical files.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

SCHEMA_VERSION = 1
DOT_KINDS = frozenset({"dot"})

_INT = {"type": "integer"}
_BOOL = {"type": "boolean"}
_STR = {"type": "string"}
_INTS = {"type": "array", "items": _INT}


def _obj(props: dict, extra: bool = True, optional: tuple[str, ...] = ()) -> dict:
    req = sorted(k for k in props if k not in optional)
    return {"type": "object", "properties": props, "required": req, "additionalProperties": extra}


_ENVELOPE = {"schemaVersion": {"const": SCHEMA_VERSION}, "kind": _STR}

SCHEMAS: dict[str, dict] = {
    "weyl": _obj({
        **_ENVELOPE,
        "order": _INT,
        "elements": {"type": "array", "items": _obj({"word": _INTS, "length": _INT, "rdesc": _INTS, "ldesc": _INTS})},
    }),
    "theta": _obj({**_ENVELOPE, "itheta": _INTS, "orbitSize": _INT, "stabOrder": _INT}),
    "sets": _obj({
        **_ENVELOPE,
        "set": _STR,
        "elements": {"type": "array", "items": _obj({"word": _INTS, "length": _INT})},
    }),
    "dims": _obj({
        **_ENVELOPE,
        "poly": _INTS,
        "identityChecks": _obj({"sumIdentity": _BOOL, "parabolicIdentity": _BOOL}),
    }),
    "algebra": _obj({
        **_ENVELOPE,
        "dim": _INT,
        "radDims": _INTS,
        "cartanMatrix": {"type": "array", "items": _INTS},
        "heredity": {"type": "array", "items": {"type": "object"}},
        "reciprocity": _BOOL,
    }),
    "quiver": {
        "oneOf": [
            {"type": "string", "description": "DOT text for the dot action"},
            _obj({**_ENVELOPE, "vertices": _INTS, "diag": _INTS, "cross": {"type": "array"}, "witness": {"type": "object"}},
                 optional=("witness",)),
            _obj({
                **_ENVELOPE,
                "n": _INT, "bound": _INT, "boxRestricted": _BOOL, "evaluated": _INT, "complete": _BOOL,
                "nextCursor": {"type": ["integer", "null"]}, "minimum": _INT, "argmin": _INTS,
                "violationCount": _INT, "violations": {"type": "array", "items": _INTS},
            }),
        ]
    },
    "reps": {
        "oneOf": [
            _obj({**_ENVELOPE, "n": _INT, "bound": _INT, "field": _STR, "count": _INT, "classes": {"type": "array"}}),
            _obj({**_ENVELOPE, "summands": {"type": "array"}, "dimVectors": {"type": "array", "items": _INTS}}),
            _obj({**_ENVELOPE, "caseA": {"type": "object"}, "caseB": {"type": "object"}, "caseC": {"type": "object"}}),
        ]
    },
    "verify": _obj({
        **_ENVELOPE,
        "passed": _BOOL,
        "checks": {"type": "array", "items": _obj({"name": _STR, "passed": _BOOL, "details": {"type": "object"}})},
    }),
}


def render(kind: str, payload) -> str:
    if kind in DOT_KINDS:
        return payload if payload.endswith("\n") else payload + "\n"
    doc = {"schemaVersion": SCHEMA_VERSION, "kind": kind, **payload}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(kind: str, payload, path: str | Path | None = None) -> str:
    """Write a report to ``path`` (stdout when ``None``) and return its text.

    IO errors propagate unchanged.
    """
    text = render(kind, payload)
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")
    return text


def schema_text(kind: str) -> str:
    return json.dumps({"$schema": "https://json-schema.org/draft/2020-12/schema", "title": kind, **SCHEMAS[kind]},
                      sort_keys=True, indent=2) + "\n"
