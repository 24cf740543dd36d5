"""Declarative field tables for the canonical types.

One table per type, in wire order. These drive JSON serialization and
parsing (`socios.model.wire`) and the published JSON Schema
(`socios.model.schema`), so the three can never drift apart.

Kinds: "str", "int", "number", "timestamp" (epoch ms <-> ISO-8601 Z),
"date", "enum:<Enum>", "object:<Type>". `repeated` marks JSON arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import types as t


@dataclass(frozen=True)
class FieldSpec:
    attr: str
    kind: str
    wire: str | None = None
    repeated: bool = False
    required: bool = False

    @property
    def wire_name(self) -> str:
        return self.wire if self.wire is not None else self.attr


def _f(attr, kind, **kw) -> FieldSpec:
    return FieldSpec(attr, kind, **kw)


FIELD_SPECS: dict[type, tuple[FieldSpec, ...]] = {
    t.ObjectId: (
        _f("id", "str", required=True),
        _f("socialNetwork", "str", required=True),
    ),
    t.Name: (
        _f("firstName", "str"),
        _f("lastName", "str"),
        _f("additionalName", "str"),
        _f("fullName", "str"),
    ),
    t.Address: (
        _f("country", "str"),
        _f("extendedAddress", "str"),
        _f("latitude", "number"),
        _f("longitude", "number"),
        _f("postalCode", "str"),
        _f("region", "str"),
        _f("streetAddress", "str"),
    ),
    t.License: (
        _f("licenseType", "str"),
        _f("name", "str"),
        _f("url", "str"),
    ),
    t.Person: (
        _f("id", "object:ObjectId", required=True),
        _f("sn", "str", required=True),
        _f("aboutMe", "str"),
        _f("addresses", "object:Address", repeated=True),
        _f("birthday", "date"),
        _f("currentLocation", "object:Address"),
        _f("username", "str"),
        _f("email", "str"),
        _f("gender", "str"),
        _f("name", "object:Name"),
        _f("photos", "str", repeated=True),
        _f("profileUrl", "str"),
        _f("memberSince", "timestamp"),
        _f("thumbnailUrl", "str"),
        _f("utcOffset", "int"),
        _f("numFriends", "int"),
        _f("inDegree", "int"),
        _f("outDegree", "int"),
    ),
    t.MediaItem: (
        _f("id", "object:ObjectId", required=True),
        _f("sn", "str", required=True),
        _f("created", "timestamp"),
        _f("title", "str"),
        _f("thumbnailUrl", "str"),
        _f("description", "str"),
        _f("duration", "number"),
        _f("location", "object:Address"),
        _f("language", "str"),
        _f("license", "object:License"),
        _f("fileSize", "int"),
        _f("rating", "number"),
        _f("numRatings", "int"),
        _f("numPositiveVotes", "int"),
        _f("numNegativeVotes", "int"),
        _f("numComments", "int"),
        _f("numViews", "int"),
        _f("numResharings", "int"),
        _f("numFavorites", "int"),
        _f("tags", "str", repeated=True),
        _f("taggedPeople", "object:ObjectId", repeated=True),
        _f("type", "enum:MediaType", required=True),
        _f("url", "str"),
        _f("userId", "object:ObjectId"),
        _f("comments", "object:Comment", repeated=True),
    ),
    t.Activity: (
        _f("id", "object:ObjectId", required=True),
        _f("sn", "str", required=True),
        _f("created", "timestamp"),
        _f("title", "str"),
        _f("description", "str"),
        _f("location", "object:Address"),
        _f("actorId", "object:ObjectId"),
        _f("objectType", "str"),
        _f("mediaItems", "object:MediaItem", repeated=True),
        _f("persons", "object:Person", repeated=True),
        _f("activities", "object:Activity", repeated=True),
    ),
    t.Comment: (
        _f("id", "object:ObjectId", required=True),
        _f("sn", "str", required=True),
        _f("created", "timestamp"),
        _f("description", "str"),
        _f("userId", "object:ObjectId"),
        _f("username", "str"),
        _f("numPositiveVotes", "int"),
    ),
    t.DateTimeFilter: (
        _f("from_", "timestamp", wire="from"),
        _f("to", "timestamp"),
    ),
    t.AreaFilter: (
        _f("latitude", "number", required=True),
        _f("longitude", "number", required=True),
        _f("radius", "number", required=True),
    ),
    t.AddressFilter: (
        _f("country", "str"),
        _f("postalCode", "str"),
        _f("region", "str"),
    ),
    t.LocationFilter: (
        _f("addressFilter", "object:AddressFilter"),
        _f("areaFilter", "object:AreaFilter"),
    ),
    t.PersonFilter: (
        _f("keywords", "str", repeated=True),
        _f("sns", "str", repeated=True),
    ),
    t.MediaItemFilter: (
        _f("created", "object:DateTimeFilter"),
        _f("keywords", "str", repeated=True),
        _f("location", "object:LocationFilter"),
        _f("language", "str"),
        _f("licenseType", "str"),
        _f("sns", "str", repeated=True),
    ),
    t.ActivityFilter: (
        _f("keywords", "str", repeated=True),
        _f("language", "str"),
        _f("sns", "str", repeated=True),
    ),
}

ENUMS: dict[str, type] = {"MediaType": t.MediaType}
