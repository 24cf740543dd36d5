"""File-backed store for user auth tokens.

This is the only persisted data in the whole system — credentials, never
user content. One tab-separated record per line:

    userAlias <TAB> network <TAB> token <TAB> subject <TAB> expiresAt

expiresAt is ISO-8601 UTC or "-" for tokens without a known expiry.
Reads are concurrent; writes are serialized and flushed atomically
(write-temp-then-rename). Expired tokens are never returned.
"""
from __future__ import annotations

import os
import threading
from pathlib import Path

from .adaptors.auth import AuthToken
from .isotime import iso_to_ms, ms_to_iso, now_ms


class TokenStore:
    def __init__(self, path: str | Path):
        self._path = Path(path)
        self._lock = threading.RLock()
        self._records: dict[tuple[str, str], AuthToken] = {}
        if self._path.exists():
            self._load()

    def put(self, user_alias: str, token: AuthToken) -> None:
        """Store (overwriting any previous token for this alias+network)."""
        if not user_alias or not token.token:
            raise ValueError("user alias and token must be nonempty")
        with self._lock:
            self._records[(user_alias, token.network)] = token
            self._flush()

    def get(self, user_alias: str, network: str) -> AuthToken | None:
        """The stored token, or None when absent or already expired."""
        with self._lock:
            token = self._records.get((user_alias, network))
        if token is None or token.expired():
            return None
        return token

    def purge_expired(self) -> int:
        """Drop expired records; live tokens are never touched."""
        now = now_ms()
        with self._lock:
            expired = [key for key, tok in self._records.items() if tok.expired(now)]
            for key in expired:
                del self._records[key]
            if expired:
                self._flush()
            return len(expired)

    def entries(self) -> list[tuple[str, AuthToken]]:
        with self._lock:
            return [(alias, tok) for (alias, _), tok in self._records.items()]

    # -- file format ----------------------------------------------------------

    def _load(self) -> None:
        for line_no, line in enumerate(self._path.read_text("utf-8").splitlines(), 1):
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 5:
                raise ValueError(f"{self._path}:{line_no}: expected 5 tab-separated fields")
            alias, network, token, subject, expires = parts
            expires_ms = None if expires == "-" else iso_to_ms(expires)
            self._records[(alias, network)] = AuthToken(
                token=token, network=network, subject=subject, expires_at_ms=expires_ms)

    def _flush(self) -> None:
        lines = []
        for (alias, _), tok in self._records.items():
            expires = "-" if tok.expires_at_ms is None else ms_to_iso(tok.expires_at_ms)
            lines.append("\t".join([alias, tok.network, tok.token, tok.subject, expires]))
        self._path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self._path.with_name(self._path.name + ".tmp")
        tmp.write_text("\n".join(lines) + ("\n" if lines else ""), "utf-8")
        os.replace(tmp, self._path)
