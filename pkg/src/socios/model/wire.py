"""Canonical JSON wire format.

Strict on parse: unknown fields, nulls, missing required fields and wrong
JSON types are all rejected with the offending field path, keeping adaptor
bugs visible instead of silently dropped. Serialization omits absent
optional fields and empty lists, emits timestamps as ISO-8601 UTC, and is
byte-deterministic (field order fixed by the field tables, compact
separators).
"""
from __future__ import annotations

import json
from datetime import date
from typing import Any

from ..envelope import QueryError, ResultEnvelope
from ..errors import ErrorCode
from ..isotime import date_to_iso, iso_to_date, iso_to_ms, ms_to_iso
from .fields import ENUMS, FIELD_SPECS, FieldSpec
from .types import CANONICAL_TYPES, KIND_BY_TYPE


class ParseError(ValueError):
    """Malformed or wrong-kind wire input; `path` names the offending field."""

    code = "PARSE_ERROR"

    def __init__(self, path: str, message: str):
        super().__init__(f"{path or '<root>'}: {message}")
        self.path = path
        self.message = message


def _join(prefix: str, name: str) -> str:
    return f"{prefix}.{name}" if prefix else name


# ---------------------------------------------------------------------------
# serialization


def to_wire(obj) -> dict[str, Any]:
    """Canonical object -> JSON-ready dict (field-table order)."""
    specs = FIELD_SPECS.get(type(obj))
    if specs is None:
        raise TypeError(f"not a canonical type: {type(obj).__name__}")
    out: dict[str, Any] = {}
    for spec in specs:
        value = getattr(obj, spec.attr)
        if spec.repeated:
            if value:
                out[spec.wire_name] = [_scalar_to_wire(v, spec) for v in value]
        elif value is not None:
            out[spec.wire_name] = _scalar_to_wire(value, spec)
    return out


def _scalar_to_wire(value, spec: FieldSpec):
    kind = spec.kind
    if kind == "timestamp":
        return ms_to_iso(value)
    if kind == "date":
        return date_to_iso(value)
    if kind.startswith("enum:"):
        return value.value
    if kind.startswith("object:"):
        return to_wire(value)
    return value


def dumps(payload: Any) -> str:
    """Deterministic compact JSON used for every wire body."""
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


def serialize_canonical(obj) -> str:
    return dumps(to_wire(obj))


# ---------------------------------------------------------------------------
# parsing


def parse_canonical(text: str, kind: str | type):
    """Inverse of serialize_canonical; `kind` names the expected type."""
    cls = CANONICAL_TYPES[kind] if isinstance(kind, str) else kind
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("", f"invalid JSON: {exc.msg}") from exc
    return from_wire(data, cls)


def from_wire(data: Any, cls: type, path: str = ""):
    specs = FIELD_SPECS.get(cls)
    if specs is None:
        raise TypeError(f"not a canonical type: {cls.__name__}")
    if not isinstance(data, dict):
        raise ParseError(path, f"expected object for {KIND_BY_TYPE[cls]}")
    by_wire = {s.wire_name: s for s in specs}
    unknown = set(data) - set(by_wire)
    if unknown:
        name = sorted(unknown)[0]
        raise ParseError(_join(path, name), "unknown field")
    kwargs: dict[str, Any] = {}
    for spec in specs:
        fpath = _join(path, spec.wire_name)
        if spec.wire_name not in data:
            if spec.required:
                raise ParseError(fpath, "missing required field")
            continue
        raw = data[spec.wire_name]
        if raw is None:
            raise ParseError(fpath, "null not allowed; omit absent fields")
        if spec.repeated:
            if not isinstance(raw, list):
                raise ParseError(fpath, "expected array")
            kwargs[spec.attr] = tuple(
                _scalar_from_wire(v, spec, f"{fpath}[{i}]") for i, v in enumerate(raw)
            )
        else:
            kwargs[spec.attr] = _scalar_from_wire(raw, spec, fpath)
    return cls(**kwargs)


def _scalar_from_wire(raw, spec: FieldSpec, path: str):
    kind = spec.kind
    if kind == "str":
        if not isinstance(raw, str):
            raise ParseError(path, "wrong type, expected string")
        return raw
    if kind == "int":
        if not isinstance(raw, int) or isinstance(raw, bool):
            raise ParseError(path, "wrong type, expected integer")
        return raw
    if kind == "number":
        if not isinstance(raw, (int, float)) or isinstance(raw, bool):
            raise ParseError(path, "wrong type, expected number")
        return raw
    if kind == "timestamp":
        if not isinstance(raw, str):
            raise ParseError(path, "wrong type, expected ISO-8601 string")
        try:
            return iso_to_ms(raw)
        except ValueError:
            raise ParseError(path, f"not an ISO-8601 timestamp: {raw!r}") from None
    if kind == "date":
        if not isinstance(raw, str):
            raise ParseError(path, "wrong type, expected date string")
        try:
            return iso_to_date(raw)
        except ValueError:
            raise ParseError(path, f"not a YYYY-MM-DD date: {raw!r}") from None
    if kind.startswith("enum:"):
        enum_cls = ENUMS[kind.split(":", 1)[1]]
        if not isinstance(raw, str):
            raise ParseError(path, "wrong type, expected string")
        try:
            return enum_cls(raw)
        except ValueError:
            allowed = ", ".join(m.value for m in enum_cls)
            raise ParseError(path, f"must be one of: {allowed}") from None
    if kind.startswith("object:"):
        nested = CANONICAL_TYPES[kind.split(":", 1)[1]]
        return from_wire(raw, nested, path)
    raise AssertionError(f"unhandled kind {kind}")


# ---------------------------------------------------------------------------
# result envelopes


def envelope_to_wire(env: ResultEnvelope) -> dict[str, Any]:
    return {
        "results": [to_wire(r) for r in env.results],
        "errors": [query_error_to_wire(e) for e in env.errors],
    }


def serialize_envelope(env: ResultEnvelope) -> str:
    return dumps(envelope_to_wire(env))


def query_error_to_wire(err: QueryError) -> dict[str, Any]:
    out: dict[str, Any] = {
        "socialNetwork": err.socialNetwork,
        "operation": err.operation,
    }
    if err.objectId is not None:
        out["objectId"] = to_wire(err.objectId)
    out["code"] = err.code.value
    out["message"] = err.message
    return out


def query_error_from_wire(data: dict, path: str = "") -> QueryError:
    if not isinstance(data, dict):
        raise ParseError(path, "expected object for QueryError")
    allowed = {"socialNetwork", "operation", "objectId", "code", "message"}
    unknown = set(data) - allowed
    if unknown:
        raise ParseError(_join(path, sorted(unknown)[0]), "unknown field")
    for req in ("socialNetwork", "operation", "code", "message"):
        if not isinstance(data.get(req), str):
            raise ParseError(_join(path, req), "missing or non-string field")
    try:
        code = ErrorCode(data["code"])
    except ValueError:
        raise ParseError(_join(path, "code"), f"unknown error code {data['code']!r}") from None
    object_id = None
    if "objectId" in data:
        object_id = from_wire(data["objectId"], CANONICAL_TYPES["ObjectId"], _join(path, "objectId"))
    return QueryError(
        socialNetwork=data["socialNetwork"],
        operation=data["operation"],
        code=code,
        message=data["message"],
        objectId=object_id,
    )


def parse_envelope(text: str, result_kind: str | type) -> ResultEnvelope:
    cls = CANONICAL_TYPES[result_kind] if isinstance(result_kind, str) else result_kind
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("", f"invalid JSON: {exc.msg}") from exc
    return envelope_from_wire(data, cls)


def envelope_from_wire(data: Any, cls: type) -> ResultEnvelope:
    if not isinstance(data, dict) or set(data) != {"results", "errors"}:
        raise ParseError("", "envelope must have exactly results and errors")
    if not isinstance(data["results"], list) or not isinstance(data["errors"], list):
        raise ParseError("results", "results and errors must be arrays")
    results = tuple(
        from_wire(item, cls, f"results[{i}]") for i, item in enumerate(data["results"])
    )
    errors = tuple(
        query_error_from_wire(item, f"errors[{i}]") for i, item in enumerate(data["errors"])
    )
    return ResultEnvelope(results, errors)
