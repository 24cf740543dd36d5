"""Adaptor SDK: the per-network contract, capabilities and the registry."""

from .auth import AuthToken
from .base import SnsAdaptor
from .capability import AdaptorCapability, RateLimit, capability
from .ratelimit import TokenBucket
from .registry import AdaptorRegistry, NetworkConfig

__all__ = [
    "AdaptorCapability",
    "AdaptorRegistry",
    "AuthToken",
    "NetworkConfig",
    "RateLimit",
    "SnsAdaptor",
    "TokenBucket",
    "capability",
]
