"""Published JSON Schema for the canonical wire format.

Generated from the same field tables the (de)serializers use. The
committed copy (canonical_schema.json) is what conformance tests and
external consumers validate against; a test asserts it matches
`build_schema()` so the document can never drift from the code.
"""
from __future__ import annotations

import json
from importlib import resources
from typing import Any

from ..errors import ErrorCode
from .fields import ENUMS, FIELD_SPECS
from .types import CANONICAL_TYPES, KIND_BY_TYPE

SCHEMA_ID = "https://socios.invalid/schemas/canonical.json"

# Result kinds an envelope can carry, in gateway use.
ENVELOPE_KINDS = ("Person", "MediaItem", "Activity", "Comment", "ObjectId")

_TIMESTAMP_PATTERN = r"^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}(\.\d{3})?Z$"
_DATE_PATTERN = r"^\d{4}-\d{2}-\d{2}$"


def _prop_schema(kind: str, defs_prefix: str = "#/$defs/") -> dict[str, Any]:
    if kind == "str":
        return {"type": "string"}
    if kind == "int":
        return {"type": "integer"}
    if kind == "number":
        return {"type": "number"}
    if kind == "timestamp":
        return {"type": "string", "pattern": _TIMESTAMP_PATTERN}
    if kind == "date":
        return {"type": "string", "pattern": _DATE_PATTERN}
    if kind.startswith("enum:"):
        enum_cls = ENUMS[kind.split(":", 1)[1]]
        return {"type": "string", "enum": [m.value for m in enum_cls]}
    if kind.startswith("object:"):
        return {"$ref": defs_prefix + kind.split(":", 1)[1]}
    raise AssertionError(f"unhandled kind {kind}")


def build_schema() -> dict[str, Any]:
    defs: dict[str, Any] = {}
    for cls, specs in FIELD_SPECS.items():
        props: dict[str, Any] = {}
        required: list[str] = []
        for spec in specs:
            prop = _prop_schema(spec.kind)
            if spec.repeated:
                prop = {"type": "array", "items": prop}
            props[spec.wire_name] = prop
            if spec.required:
                required.append(spec.wire_name)
        entry: dict[str, Any] = {
            "type": "object",
            "properties": props,
            "additionalProperties": False,
        }
        if required:
            entry["required"] = required
        defs[KIND_BY_TYPE[cls]] = entry

    defs["QueryError"] = {
        "type": "object",
        "properties": {
            "socialNetwork": {"type": "string"},
            "operation": {"type": "string"},
            "objectId": {"$ref": "#/$defs/ObjectId"},
            "code": {"type": "string", "enum": [c.value for c in ErrorCode]},
            "message": {"type": "string"},
        },
        "required": ["socialNetwork", "operation", "code", "message"],
        "additionalProperties": False,
    }
    for kind in ENVELOPE_KINDS:
        defs[f"{kind}Envelope"] = {
            "type": "object",
            "properties": {
                "results": {"type": "array", "items": {"$ref": f"#/$defs/{kind}"}},
                "errors": {"type": "array", "items": {"$ref": "#/$defs/QueryError"}},
            },
            "required": ["results", "errors"],
            "additionalProperties": False,
        }
    defs["HttpErrorBody"] = {
        "type": "object",
        "properties": {
            "code": {
                "type": "string",
                "enum": sorted({c.value for c in ErrorCode} | {"PARSE_ERROR", "NOT_FOUND"}),
            },
            "message": {"type": "string"},
        },
        "required": ["code", "message"],
        "additionalProperties": False,
    }
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": SCHEMA_ID,
        "title": "Canonical social object wire format",
        "$defs": defs,
    }


def published_schema() -> dict[str, Any]:
    """The schema document shipped with the package."""
    text = resources.files("socios.model").joinpath("canonical_schema.json").read_text("utf-8")
    return json.loads(text)


def schema_for(kind: str) -> dict[str, Any]:
    """A standalone schema validating one $defs entry of the published doc."""
    doc = published_schema()
    return {
        "$schema": doc["$schema"],
        "$defs": doc["$defs"],
        "$ref": f"#/$defs/{kind}",
    }
