"""Stub registrations for the seven well-known networks.

They declare real capabilities (activities only where the platform has
them) so capability queries and routing behave truthfully, but every
backend call fails with BACKEND_UNAVAILABLE: this is where live adaptor
implementations would plug in.
"""
from __future__ import annotations

from functools import partial

from ..errors import BackendUnavailableError
from . import methods as m
from .base import SnsAdaptor
from .capability import AdaptorCapability, RateLimit, capability
from .ratelimit import TokenBucket
from .registry import NetworkConfig

# Registration order; also the fan-out group order for these networks.
PAPER_NETWORKS = ("flickr", "facebook", "twitter", "youtube", "dailymotion",
                  "googlep", "instagram")

# Only these four have a native notion of an activity.
ACTIVITY_NETWORKS = frozenset({"facebook", "youtube", "dailymotion", "googlep"})

_HOOKS = (
    "_fetch_person", "_fetch_connected", "_fetch_connected_private",
    "_search_persons", "_person_by_username", "_persons_for_media_item",
    "_persons_for_activity", "_fetch_media_item", "_media_for_user",
    "_media_for_username", "_media_for_page", "_search_media",
    "_relevant_media", "_fetch_activity", "_activities_for_user",
    "_search_activities", "_fetch_comment", "_comments_for_media_item",
    "_comments_for_activity", "_create_post",
)


class StubAdaptor(SnsAdaptor):
    def __init__(self, config: NetworkConfig, bucket: TokenBucket,
                 declared: AdaptorCapability):
        super().__init__(config, bucket)
        self._declared = declared

    def capability(self) -> AdaptorCapability:
        return self._declared

    def _unavailable(self, *args, **kwargs):
        raise BackendUnavailableError(
            f"no live adaptor is wired for {self.network}; this stub only "
            "declares the network's capability"
        )


for _name in _HOOKS:
    setattr(StubAdaptor, _name, StubAdaptor._unavailable)


def stub_capability(name: str) -> AdaptorCapability:
    supported = m.ALL_METHODS if name in ACTIVITY_NETWORKS else m.ALL_METHODS - m.ACTIVITY_METHODS
    return AdaptorCapability(
        supported_methods=supported,
        requires_auth=m.AUTH_METHODS & supported,
        rate_limit=RateLimit(max_calls=100, per_window_seconds=1.0),
    )


# Stable factory objects so re-registration stays idempotent.
STUB_FACTORIES = {
    name: partial(StubAdaptor, declared=stub_capability(name))
    for name in PAPER_NETWORKS
}
