"""Runtime registry of known networks.

Maps each network name to its adaptor factory, declared capability and
backend endpoint config. Adaptors are instantiated fresh for every method
invocation; the registry and the per-network call budgets are the only
shared state, and both are safe for concurrent request handlers.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable

from ..errors import DuplicateNetworkError, UnknownNetworkError
from ..model.types import SocialNetworkId, is_valid_network_name
from .capability import AdaptorCapability, RateLimit
from .ratelimit import TokenBucket

if TYPE_CHECKING:
    from .base import SnsAdaptor

DEFAULT_TIMEOUT_SECONDS = 5.0


@dataclass(frozen=True, slots=True)
class NetworkConfig:
    """Per-network wiring: where the backend lives and how hard to push it."""

    name: SocialNetworkId
    endpoint: str | None = None
    timeout_seconds: float = DEFAULT_TIMEOUT_SECONDS
    rate_limit: RateLimit | None = None  # None -> capability's declared budget
    max_post_length: int | None = None


AdaptorFactory = Callable[[NetworkConfig, TokenBucket], "SnsAdaptor"]


@dataclass(frozen=True, slots=True)
class RegisteredNetwork:
    name: SocialNetworkId
    factory: AdaptorFactory
    capability: AdaptorCapability
    config: NetworkConfig
    bucket: TokenBucket = field(compare=False)


class AdaptorRegistry:
    def __init__(self):
        self._entries: dict[str, RegisteredNetwork] = {}
        self._lock = threading.Lock()

    def register(
        self,
        name: SocialNetworkId,
        factory: AdaptorFactory,
        capability: AdaptorCapability,
        config: NetworkConfig | None = None,
    ) -> None:
        """Add a network. Re-registering the same name with the same factory
        is a no-op; a different factory raises DuplicateNetworkError."""
        if not is_valid_network_name(name):
            raise ValueError(f"invalid network name: {name!r}")
        if config is None:
            config = NetworkConfig(name=name)
        with self._lock:
            existing = self._entries.get(name)
            if existing is not None:
                if existing.factory is not factory:
                    raise DuplicateNetworkError(
                        f"network {name!r} already registered with a different factory"
                    )
                return
            limit = config.rate_limit or capability.rate_limit
            self._entries[name] = RegisteredNetwork(
                name=name,
                factory=factory,
                capability=capability,
                config=config,
                bucket=TokenBucket(limit),
            )

    def known(self, name: str) -> bool:
        with self._lock:
            return name in self._entries

    def entry(self, name: str) -> RegisteredNetwork:
        with self._lock:
            entry = self._entries.get(name)
        if entry is None:
            raise UnknownNetworkError(f"unknown social network: {name!r}")
        return entry

    def capability_of(self, name: str) -> AdaptorCapability:
        return self.entry(name).capability

    def create_adaptor(self, name: str) -> "SnsAdaptor":
        """Fresh adaptor instance for one method invocation."""
        entry = self.entry(name)
        return entry.factory(entry.config, entry.bucket)

    def network_names(self) -> list[str]:
        """Registration order; defines group order for all-network fan-out."""
        with self._lock:
            return list(self._entries)

    def networks_supporting(self, method: str) -> list[str]:
        with self._lock:
            return [n for n, e in self._entries.items() if e.capability.supports(method)]
