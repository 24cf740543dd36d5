"""Registry seeding: the seven well-known networks plus the three mocks.

Registration order (stubs first, then the mocks) is the group order used
when a search fans out to "all registered networks".
"""
from __future__ import annotations

from .adaptors.capability import RateLimit
from .adaptors.chirper import ChirperAdaptor
from .adaptors.picshare import PicshareAdaptor
from .adaptors.registry import AdaptorRegistry, NetworkConfig
from .adaptors.streamhub import StreamhubAdaptor
from .adaptors.stubs import PAPER_NETWORKS, STUB_FACTORIES, stub_capability
from .mocknet import chirper as chirper_net
from .mocknet import picshare as picshare_net

MOCK_NETWORKS = ("chirper", "picshare", "streamhub")

_MOCK_ADAPTORS = {
    "chirper": ChirperAdaptor,
    "picshare": PicshareAdaptor,
    "streamhub": StreamhubAdaptor,
}

_MAX_POST = {
    "chirper": chirper_net.MAX_POST_CHARS,
    "picshare": picshare_net.MAX_NOTE_CHARS,
    "streamhub": None,  # no text posting
}


def seed_registry(
    mock_endpoints: dict[str, str],
    *,
    timeout_seconds: float = 5.0,
    rate_limits: dict[str, RateLimit] | None = None,
) -> AdaptorRegistry:
    """Build a registry with stub registrations for the seven well-known
    networks and live adaptors for the mocks at the given endpoints."""
    rate_limits = rate_limits or {}
    registry = AdaptorRegistry()
    for name in PAPER_NETWORKS:
        registry.register(
            name,
            STUB_FACTORIES[name],
            stub_capability(name),
            NetworkConfig(name=name, rate_limit=rate_limits.get(name)),
        )
    for name in MOCK_NETWORKS:
        adaptor_cls = _MOCK_ADAPTORS[name]
        registry.register(
            name,
            adaptor_cls,
            adaptor_cls.CAPABILITY,
            NetworkConfig(
                name=name,
                endpoint=mock_endpoints[name],
                timeout_seconds=timeout_seconds,
                rate_limit=rate_limits.get(name),
                max_post_length=_MAX_POST[name],
            ),
        )
    return registry
