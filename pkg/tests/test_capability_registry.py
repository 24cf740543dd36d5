import pytest

from socios.adaptors import methods as m
from socios.adaptors.capability import AdaptorCapability, RateLimit, capability
from socios.adaptors.chirper import ChirperAdaptor
from socios.adaptors.picshare import PicshareAdaptor
from socios.adaptors.registry import AdaptorRegistry, NetworkConfig
from socios.adaptors.streamhub import StreamhubAdaptor
from socios.adaptors.stubs import ACTIVITY_NETWORKS, PAPER_NETWORKS, stub_capability
from socios.bootstrap import seed_registry
from socios.errors import DuplicateNetworkError, UnknownNetworkError

LIMIT = RateLimit(10, 1.0)


def _registry():
    return seed_registry({"chirper": "http://localhost:1", "picshare": "http://localhost:2",
                          "streamhub": "http://localhost:3"})


def test_capability_rejects_unknown_method_names():
    with pytest.raises(ValueError):
        AdaptorCapability(frozenset({"getEverything"}), frozenset(), LIMIT)


def test_requires_auth_must_be_subset():
    with pytest.raises(ValueError):
        AdaptorCapability(frozenset({m.GET_PERSONS}), frozenset({m.POST_MESSAGE}), LIMIT)


def test_auth_methods_always_require_auth_when_supported():
    with pytest.raises(ValueError):
        AdaptorCapability(frozenset({m.POST_MESSAGE}), frozenset(), LIMIT)
    cap = capability({m.POST_MESSAGE, m.GET_PERSONS}, LIMIT)
    assert cap.requires_auth == frozenset({m.POST_MESSAGE})


def test_seeded_registry_has_all_ten_names():
    registry = _registry()
    assert registry.network_names() == list(PAPER_NETWORKS) + ["chirper", "picshare", "streamhub"]


def test_activity_subset_matches_declared_platforms():
    # Only these four well-known platforms have a native activity notion.
    assert ACTIVITY_NETWORKS == {"facebook", "youtube", "dailymotion", "googlep"}
    registry = _registry()
    assert m.GET_ACTIVITIES in registry.capability_of("facebook").supported_methods
    assert m.GET_ACTIVITIES not in registry.capability_of("twitter").supported_methods
    for name in PAPER_NETWORKS:
        declared = registry.capability_of(name).supported_methods
        has_activities = m.ACTIVITY_METHODS <= declared
        assert has_activities == (name in ACTIVITY_NETWORKS)
        assert not (m.ACTIVITY_METHODS & declared) or has_activities


def test_mock_capability_variance():
    registry = _registry()
    chirper = registry.capability_of("chirper").supported_methods
    picshare = registry.capability_of("picshare").supported_methods
    streamhub = registry.capability_of("streamhub").supported_methods
    assert not (m.ACTIVITY_METHODS & chirper)
    assert m.GET_MEDIA_ITEMS_FOR_PAGE not in chirper
    assert not (m.ACTIVITY_METHODS & picshare)
    assert m.GET_MEDIA_ITEMS_FOR_PAGE in picshare
    assert m.ACTIVITY_METHODS <= streamhub
    assert m.POST_MESSAGE not in streamhub


def test_capability_of_unknown_network():
    with pytest.raises(UnknownNetworkError):
        _registry().capability_of("nosuch")


def test_reregistration_same_factory_is_idempotent():
    registry = _registry()
    before = registry.network_names()
    registry.register("chirper", ChirperAdaptor, ChirperAdaptor.CAPABILITY,
                      NetworkConfig(name="chirper", endpoint="http://localhost:1"))
    assert registry.network_names() == before


def test_duplicate_name_different_factory_rejected():
    registry = _registry()
    with pytest.raises(DuplicateNetworkError):
        registry.register("chirper", PicshareAdaptor, PicshareAdaptor.CAPABILITY)


def test_register_validates_name_token():
    registry = AdaptorRegistry()
    with pytest.raises(ValueError):
        registry.register("Chirper", ChirperAdaptor, ChirperAdaptor.CAPABILITY)


def test_fresh_adaptor_instance_per_invocation():
    registry = _registry()
    a = registry.create_adaptor("streamhub")
    b = registry.create_adaptor("streamhub")
    assert a is not b
    assert isinstance(a, StreamhubAdaptor)
    # the call budget is shared process-wide per network
    assert a._bucket is b._bucket


def test_networks_supporting_filters_by_method():
    registry = _registry()
    activity_capable = registry.networks_supporting(m.FIND_ACTIVITIES)
    assert activity_capable == ["facebook", "youtube", "dailymotion", "googlep", "streamhub"]
    posting = registry.networks_supporting(m.POST_MESSAGE)
    assert "streamhub" not in posting and "chirper" in posting


def test_stub_capability_counts():
    assert len(stub_capability("facebook").supported_methods) == 16
    assert len(stub_capability("twitter").supported_methods) == 12
