"""User auth tokens passed through to backends; never acquired here."""
from __future__ import annotations

from dataclasses import dataclass

from ..isotime import now_ms
from ..model.types import SocialNetworkId


@dataclass(frozen=True, slots=True)
class AuthToken:
    """An opaque backend token bound to one network and one subject.

    expires_at_ms may be None when the caller passed a raw bearer token
    whose expiry only the backend knows; tokens with a known past expiry
    are never sent to a backend.
    """

    token: str
    network: SocialNetworkId
    subject: str
    expires_at_ms: int | None = None

    def expired(self, now: int | None = None) -> bool:
        if self.expires_at_ms is None:
            return False
        return self.expires_at_ms <= (now_ms() if now is None else now)
