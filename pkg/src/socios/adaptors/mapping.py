"""Field-by-field mapping declarations: native schema <-> canonical type.

Each mock-network adaptor ships a table of FieldMapEntry rows describing
exactly which native field feeds which canonical field and under what
conversion. The translation code is written by hand; the conformance
suite replays these tables over the full fixture datasets to prove the
hand-written translation preserves every covered field. The tables are
also the source for the mapping documentation in docs/.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable


@dataclass(frozen=True)
class FieldMapEntry:
    native: str
    canonical: str
    convert: Callable[[Any], Any] | None = None
    note: str = ""


_INDEX_RE = re.compile(r"^(.*)\[(\d+|\*)\]$")


def resolve_path(value: Any, path: str) -> Any:
    """Walk a dotted path over dicts/objects; "[*]" maps over a sequence,
    "[i]" indexes into one. Absent segments resolve to None."""
    return _resolve(value, path.split(".") if path else [])


def _resolve(value: Any, parts: list[str]) -> Any:
    if value is None:
        return None
    if not parts:
        return value
    head, rest = parts[0], parts[1:]
    m = _INDEX_RE.match(head)
    if m:
        seq = _get(value, m.group(1))
        if seq is None:
            return None
        if m.group(2) == "*":
            return [_resolve(item, rest) for item in seq]
        idx = int(m.group(2))
        return _resolve(seq[idx], rest) if idx < len(seq) else None
    return _resolve(_get(value, head), rest)


def _get(value: Any, name: str) -> Any:
    if isinstance(value, dict):
        return value.get(name)
    return getattr(value, name, None)


def seconds_to_ms(v):
    return v * 1000 if v is not None else None
