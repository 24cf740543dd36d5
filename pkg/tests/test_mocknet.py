import json
import re
import time

import pytest
import requests

from socios.mocknet import chirper, picshare, streamhub
from socios.mocknet.server import MockNetworkServer

GENERATORS = {"chirper": chirper.generate, "picshare": picshare.generate,
              "streamhub": streamhub.generate}


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_fixture_determinism_byte_identical(name):
    a = json.dumps(GENERATORS[name](2014), sort_keys=False)
    b = json.dumps(GENERATORS[name](2014), sort_keys=False)
    assert a == b
    c = json.dumps(GENERATORS[name](99), sort_keys=False)
    assert a != c


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_fixture_scale(name):
    data = GENERATORS[name](2014)
    tables = {
        "chirper": ("users", "posts"),
        "picshare": ("members", "items"),
        "streamhub": ("accounts", "videos"),
    }[name]
    assert 40 <= len(data[tables[0]]) <= 60
    assert 150 <= len(data[tables[1]]) <= 250
    if name == "streamhub":
        assert 15 <= len(data["events"]) <= 30


def _field_names(record, prefix=""):
    out = set()
    for key, value in record.items():
        out.add(key)
        if isinstance(value, dict):
            out |= _field_names(value)
    return out


def test_schema_heterogeneity_no_shared_field_names():
    """No two mock networks may share media field naming, so adaptor
    mapping can never be a passthrough."""
    samples = {
        "chirper": next(iter(chirper.generate(2014)["posts"].values())),
        "picshare": next(iter(picshare.generate(2014)["items"].values())),
        "streamhub": next(iter(streamhub.generate(2014)["videos"].values())),
    }
    names = {net: _field_names(rec) for net, rec in samples.items()}
    assert not names["chirper"] & names["picshare"]
    assert not names["chirper"] & names["streamhub"]
    assert not names["picshare"] & names["streamhub"]


def test_timestamp_conventions_differ():
    chirp = next(iter(chirper.generate(2014)["posts"].values()))["posted_at"]
    pic = next(iter(picshare.generate(2014)["items"].values()))["takenAt"]
    stream = next(iter(streamhub.generate(2014)["videos"].values()))["PostedTime"]
    assert isinstance(chirp, int) and chirp < 10_000_000_000  # epoch seconds
    assert isinstance(pic, str) and re.match(r"^\d{4}-\d{2}-\d{2}T", pic)  # ISO-8601
    assert isinstance(stream, int) and stream > 1_000_000_000_000  # epoch millis


@pytest.fixture()
def chirper_server():
    server = MockNetworkServer(chirper.ChirperApp(2014)).start()
    yield server
    server.stop()


def test_native_user_record_snake_case(chirper_server):
    r = requests.get(f"{chirper_server.url}/users/u1", timeout=5)
    assert r.status_code == 200
    body = r.json()
    assert body["user_id"] == "u1"
    assert "handle" in body and "joined_at" in body


def test_request_log_records_native_calls_only(chirper_server):
    app = chirper_server.app
    requests.get(f"{chirper_server.url}/users/u1", timeout=5)
    requests.get(f"{chirper_server.url}/_admin/log", timeout=5)
    entries = app.request_log.entries()
    assert len(entries) == 1
    assert entries[0]["method"] == "GET"
    assert entries[0]["path"] == "/users/u1"


def test_native_404_shape(chirper_server):
    r = requests.get(f"{chirper_server.url}/users/ghost", timeout=5)
    assert r.status_code == 404
    assert r.json()["error"]["code"] == "not_found"


def test_fault_down_aborts_connection(chirper_server):
    chirper_server.app.faults.down = True
    with pytest.raises(requests.ConnectionError):
        requests.get(f"{chirper_server.url}/users/u1", timeout=5)
    # admin surface stays reachable while the native API is down
    r = requests.get(f"{chirper_server.url}/_admin/ping", timeout=5)
    assert r.status_code == 200


def test_fault_error_rate_one_gives_500s(chirper_server):
    chirper_server.app.faults.error_rate = 1.0
    for _ in range(3):
        r = requests.get(f"{chirper_server.url}/users/u1", timeout=5)
        assert r.status_code == 500


def test_fault_latency_delays_response(chirper_server):
    chirper_server.app.faults.latency_seconds = 0.3
    t0 = time.monotonic()
    requests.get(f"{chirper_server.url}/users/u1", timeout=5)
    assert time.monotonic() - t0 >= 0.3


def test_admin_faults_roundtrip(chirper_server):
    r = requests.post(f"{chirper_server.url}/_admin/faults",
                      json={"errorRate": 0.5, "latencySeconds": 0.1}, timeout=5)
    assert r.json() == {"down": False, "latencySeconds": 0.1, "errorRate": 0.5}


def test_token_issue_validate_and_expiry(chirper_server):
    url = chirper_server.url
    grant = requests.post(f"{url}/_admin/token",
                          json={"subject": "u1", "ttlSeconds": 60}, timeout=5).json()
    check = requests.get(f"{url}/_admin/token/validate",
                         params={"token": grant["token"]}, timeout=5).json()
    assert check["subject"] == "u1"
    expired = requests.post(f"{url}/_admin/token",
                            json={"subject": "u1", "ttlSeconds": -5}, timeout=5).json()
    check = requests.get(f"{url}/_admin/token/validate",
                         params={"token": expired["token"]}, timeout=5).json()
    assert check["subject"] is None


def test_token_for_unknown_subject_rejected(chirper_server):
    r = requests.post(f"{chirper_server.url}/_admin/token",
                      json={"subject": "ghost"}, timeout=5)
    assert r.status_code == 404


def test_private_follows_require_matching_subject(chirper_server):
    url = chirper_server.url
    assert requests.get(f"{url}/users/u1/following/all", timeout=5).status_code == 401
    grant = requests.post(f"{url}/_admin/token",
                          json={"subject": "u2", "ttlSeconds": 60}, timeout=5).json()
    headers = {"Authorization": f"Bearer {grant['token']}"}
    assert requests.get(f"{url}/users/u1/following/all", headers=headers,
                        timeout=5).status_code == 403
    assert requests.get(f"{url}/users/u2/following/all", headers=headers,
                        timeout=5).status_code == 200


def test_mutation_add_then_delete(chirper_server):
    url = chirper_server.url
    added = requests.post(f"{url}/_admin/mutate",
                          json={"op": "add_media", "owner": "u1", "text": "fresh #news"},
                          timeout=5).json()
    new_id = added["id"]
    assert requests.get(f"{url}/posts/{new_id}", timeout=5).status_code == 200
    posts = requests.get(f"{url}/users/u1/posts", timeout=5).json()["posts"]
    assert new_id in [p["post_id"] for p in posts]
    requests.post(f"{url}/_admin/mutate", json={"op": "delete_media", "id": new_id}, timeout=5)
    assert requests.get(f"{url}/posts/{new_id}", timeout=5).status_code == 404


def test_mutation_invalid_target(chirper_server):
    r = requests.post(f"{chirper_server.url}/_admin/mutate",
                      json={"op": "delete_media", "id": "nope"}, timeout=5)
    assert r.status_code == 404


def test_reset_restores_generated_state(chirper_server):
    url = chirper_server.url
    requests.post(f"{url}/_admin/mutate",
                  json={"op": "add_media", "owner": "u1", "text": "temp"}, timeout=5)
    requests.post(f"{url}/_admin/reset", timeout=5)
    fresh = chirper.generate(2014)
    assert len(chirper_server.app.posts) == len(fresh["posts"])
