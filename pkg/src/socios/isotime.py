"""Timestamp helpers.

Internally all timestamps are integer epoch milliseconds (UTC); on the
wire they are ISO-8601 UTC strings ("2014-07-18T12:00:00Z").
"""
from __future__ import annotations

import time
from datetime import date, datetime, timezone

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


def now_ms() -> int:
    return int(time.time() * 1000)


def ms_to_iso(ms: int) -> str:
    """Render epoch milliseconds as ISO-8601 UTC with a trailing Z."""
    secs, msec = divmod(int(ms), 1000)
    dt = datetime.fromtimestamp(secs, tz=timezone.utc)
    base = dt.strftime("%Y-%m-%dT%H:%M:%S")
    if msec:
        return f"{base}.{msec:03d}Z"
    return base + "Z"


def iso_to_ms(text: str) -> int:
    """Parse an ISO-8601 datetime (Z or explicit offset) to epoch ms.

    Raises ValueError on anything else, including bare dates.
    """
    if not isinstance(text, str) or "T" not in text:
        raise ValueError(f"not an ISO-8601 datetime: {text!r}")
    normalized = text[:-1] + "+00:00" if text.endswith("Z") else text
    dt = datetime.fromisoformat(normalized)
    if dt.tzinfo is None:
        raise ValueError(f"missing UTC offset: {text!r}")
    delta = dt - _EPOCH
    return (delta.days * 86_400_000) + (delta.seconds * 1000) + (delta.microseconds // 1000)


def date_to_iso(d: date) -> str:
    return d.isoformat()


def iso_to_date(text: str) -> date:
    if not isinstance(text, str):
        raise ValueError(f"not a date string: {text!r}")
    return date.fromisoformat(text)
