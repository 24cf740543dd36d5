"""HTTP gateway: routing, param decoding, byte-identity with the core."""
import json

import jsonschema
import pytest
import requests

from socios.gateway import endpoint_table
from socios.model.schema import schema_for
from socios.model.types import (
    ActivityFilter,
    AreaFilter,
    DateTimeFilter,
    LocationFilter,
    MediaItemFilter,
    ObjectId,
    PersonFilter,
)
from socios.model.wire import serialize_envelope

FIG6_PARAM_NAMES = {"id", "sn", "sns", "keywords", "username", "from", "to",
                    "country", "lat", "lon", "rad", "lang", "lic", "msg",
                    "format", "subject"}


def _get(stack, endpoint, **params):
    params.setdefault("format", "json")
    return requests.get(f"{stack.gateway.base_url}/{endpoint}", params=params, timeout=10)


def test_endpoint_table_is_complete_and_param_names_match():
    table = endpoint_table()
    names = [e["name"] for e in table["endpoints"]]
    assert len(names) == 19 and len(set(names)) == 19
    assert table["basePath"] == "/sociosapi/v1"
    for endpoint in table["endpoints"]:
        for param in endpoint["params"]:
            assert param["name"] in FIG6_PARAM_NAMES, (endpoint["name"], param["name"])
    # the four findPersons projections plus the 15 other methods
    core_methods = {e["coreMethod"] for e in table["endpoints"]}
    assert len(core_methods) == 16


def test_get_person_basic(ro_stack):
    r = _get(ro_stack, "getPerson", id="u1", sn="chirper")
    assert r.status_code == 200
    body = r.json()
    assert len(body["results"]) == 1 and body["errors"] == []
    assert body["results"][0]["id"] == {"id": "u1", "socialNetwork": "chirper"}
    jsonschema.Draft202012Validator(schema_for("PersonEnvelope")).validate(body)


def test_envelope_carries_partial_failure_as_200(stack):
    stack.mocks["picshare"].stop()
    r = _get(stack, "findMediaItems", keywords="sunset", sns="picshare,chirper")
    assert r.status_code == 200
    body = r.json()
    assert any(e["code"] == "BACKEND_UNAVAILABLE" for e in body["errors"])


def test_format_xml_rejected(ro_stack):
    r = _get(ro_stack, "getPerson", id="u1", sn="chirper", format="xml")
    assert r.status_code == 400
    assert r.json()["code"] == "BAD_REQUEST"


def test_format_defaults_to_json(ro_stack):
    r = requests.get(f"{ro_stack.gateway.base_url}/getPerson",
                     params={"id": "u1", "sn": "chirper"}, timeout=10)
    assert r.status_code == 200


def test_unknown_path_404(ro_stack):
    r = requests.get(f"{ro_stack.gateway.base_url}/getEverything", timeout=10)
    assert r.status_code == 404
    assert r.json()["code"] == "NOT_FOUND"
    r = requests.get(f"{ro_stack.gateway.url}/elsewhere", timeout=10)
    assert r.status_code == 404


def test_wrong_verb_405(ro_stack):
    r = requests.post(f"{ro_stack.gateway.base_url}/getPerson",
                      params={"id": "u1", "sn": "chirper"}, timeout=10)
    assert r.status_code == 405


def test_missing_required_param_400(ro_stack):
    r = _get(ro_stack, "getPerson", id="u1")
    assert r.status_code == 400
    assert "sn" in r.json()["message"]


def test_unknown_param_400(ro_stack):
    r = _get(ro_stack, "getPerson", id="u1", sn="chirper", verbose="1")
    assert r.status_code == 400


def test_invalid_network_token_400(ro_stack):
    r = _get(ro_stack, "getPerson", id="u1", sn="Chirper!")
    assert r.status_code == 400


def test_bad_timestamp_400(ro_stack):
    r = _get(ro_stack, "findMediaItems", keywords="x", **{"from": "yesterday"})
    assert r.status_code == 400


def test_partial_geo_params_400(ro_stack):
    r = _get(ro_stack, "findMediaItems", keywords="x", lat="48.0", lon="2.0")
    assert r.status_code == 400


def test_selector_violation_is_400(ro_stack):
    r = _get(ro_stack, "getMediaItemsForUser", sn="chirper")
    assert r.status_code == 400
    r = _get(ro_stack, "getMediaItemsForUser", sn="chirper", id="u1", username="x")
    assert r.status_code == 400


def test_empty_keywords_400(ro_stack):
    r = _get(ro_stack, "findActivities", keywords="")
    assert r.status_code == 400


@pytest.mark.parametrize("endpoint,params,core_call", [
    ("getPerson", {"id": "u1", "sn": "chirper"},
     lambda c: c.get_persons([ObjectId("u1", "chirper")])),
    ("connectedPersons", {"id": "u2", "sn": "picshare"},
     lambda c: c.connected_persons(ObjectId("u2", "picshare"))),
    ("findPersonsByKeyword", {"keywords": "alice,rosa", "sns": "chirper,picshare"},
     lambda c: c.find_persons(person_filter=PersonFilter(
         keywords=("alice", "rosa"), sns=("chirper", "picshare")))),
    ("findPersonsByMediaItem", {"id": "m1", "sn": "picshare"},
     lambda c: c.find_persons(media_item_id=ObjectId("m1", "picshare"))),
    ("findPersonsByActivity", {"id": "a1", "sn": "streamhub"},
     lambda c: c.find_persons(activity_id=ObjectId("a1", "streamhub"))),
    ("getMediaItem", {"id": "m1", "sn": "picshare"},
     lambda c: c.get_media_items([ObjectId("m1", "picshare")])),
    ("getMediaItemsForPage", {"id": "c1", "sn": "streamhub"},
     lambda c: c.get_media_items_for_page(ObjectId("c1", "streamhub"))),
    ("findMediaItems",
     {"keywords": "sunset", "sns": "picshare,chirper",
      "lat": "48.8566", "lon": "2.3522", "rad": "10",
      "from": "2013-01-01T00:00:00Z", "to": "2014-07-18T00:00:00Z"},
     lambda c: c.find_media_items(MediaItemFilter(
         created=DateTimeFilter(from_=1356998400000, to=1405641600000),
         keywords=("sunset",),
         location=LocationFilter(areaFilter=AreaFilter(48.8566, 2.3522, 10.0)),
         sns=("picshare", "chirper")))),
    ("findRelevantMediaItems", {"id": "m1", "sn": "picshare"},
     lambda c: c.find_relevant_media_items(ObjectId("m1", "picshare"))),
    ("getActivity", {"id": "a1", "sn": "streamhub"},
     lambda c: c.get_activities([ObjectId("a1", "streamhub")])),
    ("getActivitiesForUser", {"id": "u1", "sn": "streamhub"},
     lambda c: c.get_activities_for_user(ObjectId("u1", "streamhub"))),
    ("findActivities", {"keywords": "upload", "sns": "streamhub", "lang": "en"},
     lambda c: c.find_activities(ActivityFilter(
         keywords=("upload",), language="en", sns=("streamhub",)))),
    ("getComment", {"id": "r1", "sn": "chirper"},
     lambda c: c.get_comments([ObjectId("r1", "chirper")])),
    ("getCommentsForMediaItem", {"id": "m1", "sn": "picshare"},
     lambda c: c.get_comments_for_media_item(ObjectId("m1", "picshare"))),
    ("getCommentsForActivity", {"id": "a1", "sn": "streamhub"},
     lambda c: c.get_comments_for_activity(ObjectId("a1", "streamhub"))),
])
def test_http_body_byte_identical_to_core(ro_stack, endpoint, params, core_call):
    r = _get(ro_stack, endpoint, **params)
    assert r.status_code == 200
    assert r.text == serialize_envelope(core_call(ro_stack.core))


def test_username_endpoints_byte_identical(ro_stack):
    handle = ro_stack.app("chirper").users["u3"]["handle"]
    r = _get(ro_stack, "findPersonsByUsername", username=handle, sn="chirper")
    assert r.text == serialize_envelope(
        ro_stack.core.find_persons(username=(handle, "chirper")))
    r = _get(ro_stack, "getMediaItemsForUser", username=handle, sn="chirper")
    assert r.text == serialize_envelope(
        ro_stack.core.get_media_items_for_user(username=(handle, "chirper")))


def test_my_connected_persons_auth_flow(stack):
    token = stack.issue_token("chirper", "u1")
    url = f"{stack.gateway.base_url}/myConnectedPersons"
    # no token
    r = requests.get(url, params={"id": "u1", "sn": "chirper"}, timeout=10)
    assert r.status_code == 200
    assert [e["code"] for e in r.json()["errors"]] == ["AUTH_REQUIRED"]
    # valid bearer; subject defaults to the target id
    r = requests.get(url, params={"id": "u1", "sn": "chirper"},
                     headers={"Authorization": f"Bearer {token.token}"}, timeout=10)
    body = r.json()
    assert body["errors"] == []
    edges = stack.app("chirper").follows["u1"]
    assert [p["id"]["id"] for p in body["results"]] == edges["public"] + edges["private"]
    # explicit mismatched subject
    r = requests.get(url, params={"id": "u1", "sn": "chirper", "subject": "u9"},
                     headers={"Authorization": f"Bearer {token.token}"}, timeout=10)
    assert [e["code"] for e in r.json()["errors"]] == ["AUTH_INVALID"]


def test_post_message_via_rest(stack):
    token = stack.issue_token("picshare", "p1")
    url = f"{stack.gateway.base_url}/postMessage"
    r = requests.post(url, params={"id": "p1", "sn": "picshare", "msg": "hello rest"},
                      headers={"Authorization": f"Bearer {token.token}"}, timeout=10)
    assert r.status_code == 200
    body = r.json()
    assert body["errors"] == []
    new_id = body["results"][0]
    jsonschema.Draft202012Validator(schema_for("ObjectIdEnvelope")).validate(body)
    follow = _get(stack, "getMediaItemsForUser", id="p1", sn="picshare")
    assert new_id in [m["id"] for m in follow.json()["results"]]


def test_post_message_empty_msg_400(stack):
    token = stack.issue_token("chirper", "u1")
    r = requests.post(f"{stack.gateway.base_url}/postMessage",
                      params={"id": "u1", "sn": "chirper", "msg": ""},
                      headers={"Authorization": f"Bearer {token.token}"}, timeout=10)
    assert r.status_code == 400


def test_health_lists_networks_and_capabilities(ro_stack):
    r = requests.get(f"{ro_stack.gateway.base_url}/health", timeout=10)
    assert r.status_code == 200
    networks = {n["name"]: n for n in r.json()["networks"]}
    assert set(networks) == {"flickr", "facebook", "twitter", "youtube", "dailymotion",
                             "googlep", "instagram", "chirper", "picshare", "streamhub"}
    assert "getActivities" in networks["streamhub"]["supportedMethods"]
    assert "getActivities" not in networks["chirper"]["supportedMethods"]
    assert networks["picshare"]["rateLimit"]["maxCalls"] > 0


def test_health_reflects_new_registration(stack):
    from socios.adaptors.stubs import StubAdaptor, stub_capability
    from socios.adaptors.registry import NetworkConfig
    from functools import partial
    cap = stub_capability("twitter")
    stack.registry.register("elevenths", partial(StubAdaptor, declared=cap), cap,
                            NetworkConfig(name="elevenths"))
    r = requests.get(f"{stack.gateway.base_url}/health", timeout=10)
    assert "elevenths" in [n["name"] for n in r.json()["networks"]]


def test_keyword_encoding_round_trips(ro_stack):
    # percent-encoded spaces and unicode arrive intact
    r = _get(ro_stack, "findMediaItems", keywords="night market", sns="picshare")
    assert r.status_code == 200
    body = serialize_envelope(ro_stack.core.find_media_items(
        MediaItemFilter(keywords=("night market",), sns=("picshare",))))
    assert r.text == body
