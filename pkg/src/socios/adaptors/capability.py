"""Per-network declaration of supported methods, auth needs and call budget."""
from __future__ import annotations

from dataclasses import dataclass

from .methods import ALL_METHODS, AUTH_METHODS


@dataclass(frozen=True, slots=True)
class RateLimit:
    """Token-bucket budget: at most max_calls backend calls per window."""

    max_calls: int
    per_window_seconds: float = 1.0

    def __post_init__(self):
        if self.max_calls < 1:
            raise ValueError("max_calls must be >= 1")
        if self.per_window_seconds <= 0:
            raise ValueError("per_window_seconds must be > 0")


@dataclass(frozen=True, slots=True)
class AdaptorCapability:
    supported_methods: frozenset[str]
    requires_auth: frozenset[str]
    rate_limit: RateLimit

    def __post_init__(self):
        object.__setattr__(self, "supported_methods", frozenset(self.supported_methods))
        object.__setattr__(self, "requires_auth", frozenset(self.requires_auth))
        unknown = self.supported_methods - ALL_METHODS
        if unknown:
            raise ValueError(f"unknown method names: {sorted(unknown)}")
        if not self.requires_auth <= self.supported_methods:
            raise ValueError("requires_auth must be a subset of supported_methods")
        missing = (AUTH_METHODS & self.supported_methods) - self.requires_auth
        if missing:
            raise ValueError(f"auth-only methods must declare auth: {sorted(missing)}")

    def supports(self, method: str) -> bool:
        return method in self.supported_methods


def capability(
    supported: frozenset[str] | set[str],
    rate_limit: RateLimit,
    extra_auth: set[str] = frozenset(),
) -> AdaptorCapability:
    """Build a capability; the two private-data methods get auth implicitly."""
    supported = frozenset(supported)
    return AdaptorCapability(
        supported_methods=supported,
        requires_auth=(AUTH_METHODS | frozenset(extra_auth)) & supported,
        rate_limit=rate_limit,
    )
