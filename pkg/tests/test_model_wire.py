import json
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gen
from socios.envelope import QueryError, ResultEnvelope
from socios.errors import ErrorCode
from socios.isotime import iso_to_ms, ms_to_iso
from socios.model.types import (
    CANONICAL_TYPES,
    KIND_BY_TYPE,
    MediaType,
    ObjectId,
    Person,
)
from socios.model.wire import (
    ParseError,
    envelope_from_wire,
    envelope_to_wire,
    parse_canonical,
    parse_envelope,
    serialize_canonical,
    serialize_envelope,
    to_wire,
)


def test_object_id_exact_wire_text():
    oid = ObjectId(id="42", socialNetwork="streamhub")
    assert serialize_canonical(oid) == '{"id":"42","socialNetwork":"streamhub"}'


def test_parse_wrong_type_reports_field_path():
    with pytest.raises(ParseError) as err:
        parse_canonical('{"id":42}', "ObjectId")
    assert err.value.path == "id"


def test_unknown_field_rejected():
    with pytest.raises(ParseError) as err:
        parse_canonical('{"id":"42","socialNetwork":"streamhub","extra":1}', "ObjectId")
    assert err.value.path == "extra"


def test_null_rejected():
    with pytest.raises(ParseError) as err:
        parse_canonical('{"id":"42","socialNetwork":null}', "ObjectId")
    assert err.value.path == "socialNetwork"


def test_missing_required_rejected():
    with pytest.raises(ParseError) as err:
        parse_canonical('{"id":"42"}', "ObjectId")
    assert err.value.path == "socialNetwork"


def test_nested_paths_in_errors():
    text = '{"id":{"id":"m1","socialNetwork":"picshare"},"sn":"picshare","type":"IMAGE","taggedPeople":[{"id":"p1","socialNetwork":"picshare"},{"id":7,"socialNetwork":"x"}]}'
    with pytest.raises(ParseError) as err:
        parse_canonical(text, "MediaItem")
    assert err.value.path == "taggedPeople[1].id"


def test_enum_values_checked():
    text = '{"id":{"id":"m1","socialNetwork":"picshare"},"sn":"picshare","type":"GIF"}'
    with pytest.raises(ParseError) as err:
        parse_canonical(text, "MediaItem")
    assert err.value.path == "type"


def test_malformed_json_is_parse_error():
    with pytest.raises(ParseError):
        parse_canonical("{not json", "ObjectId")


def test_absent_optionals_omitted_never_null():
    person = Person(id=ObjectId("u1", "chirper"), sn="chirper")
    data = to_wire(person)
    assert set(data) == {"id", "sn"}
    assert "null" not in serialize_canonical(person)


def test_timestamps_serialized_as_iso_z():
    person = Person(id=ObjectId("u1", "chirper"), sn="chirper",
                    memberSince=1405684800000)
    assert to_wire(person)["memberSince"] == "2014-07-18T12:00:00Z"


def test_timestamp_millis_survive():
    assert ms_to_iso(1405684800123) == "2014-07-18T12:00:00.123Z"
    assert iso_to_ms("2014-07-18T12:00:00.123Z") == 1405684800123


def test_wire_field_name_for_datetime_filter_from():
    from socios.model.types import DateTimeFilter
    flt = DateTimeFilter(from_=1000, to=2000)
    data = to_wire(flt)
    assert set(data) == {"from", "to"}
    assert parse_canonical(serialize_canonical(flt), "DateTimeFilter") == flt


def test_bool_is_not_a_count():
    with pytest.raises(ParseError):
        parse_canonical('{"id":"42","socialNetwork":"s"}'.replace('"42"', "true"), "ObjectId")


@pytest.mark.parametrize("kind", sorted(CANONICAL_TYPES))
def test_roundtrip_each_kind(kind):
    rng = Random(f"roundtrip/{kind}")
    generator = gen.GENERATORS[kind]
    for _ in range(50):
        obj = generator(rng)
        assert parse_canonical(serialize_canonical(obj), kind) == obj


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**48))
def test_roundtrip_property(seed):
    kind, obj = gen.any_canonical(Random(seed))
    assert parse_canonical(serialize_canonical(obj), kind) == obj


def test_envelope_roundtrip_with_errors():
    rng = Random("envelope")
    env = ResultEnvelope(
        results=tuple(gen.person(rng) for _ in range(3)),
        errors=(
            QueryError("picshare", "getPersons", ErrorCode.NOT_FOUND,
                       "backend reports unknown object", objectId=ObjectId("nope", "picshare")),
            QueryError("downnet", "getPersons", ErrorCode.UNKNOWN_NETWORK,
                       "unknown social network"),
        ),
    )
    text = serialize_envelope(env)
    parsed = parse_envelope(text, "Person")
    assert parsed == env


def test_envelope_wire_shape():
    data = envelope_to_wire(ResultEnvelope())
    assert data == {"results": [], "errors": []}
    assert json.loads(serialize_envelope(ResultEnvelope())) == data


def test_envelope_rejects_extra_keys():
    with pytest.raises(ParseError):
        envelope_from_wire({"results": [], "errors": [], "next": 1}, Person)


def test_kind_by_type_is_bijective():
    assert len(KIND_BY_TYPE) == len(CANONICAL_TYPES)
    for kind, cls in CANONICAL_TYPES.items():
        assert KIND_BY_TYPE[cls] == kind


def test_media_type_enum_on_wire():
    rng = Random("mt")
    item = gen.media_item(rng)
    data = to_wire(item)
    assert data["type"] in {m.value for m in MediaType}
