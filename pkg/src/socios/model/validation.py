"""Semantic validation of canonical objects.

`validate` is total: it never raises on a canonical instance and returns
the full list of rule violations (empty iff the object is valid).
Violations are data, not errors, so callers can decide severity.
"""
from __future__ import annotations

from dataclasses import dataclass

from .types import (
    Activity,
    ActivityFilter,
    Address,
    AddressFilter,
    AreaFilter,
    Comment,
    DateTimeFilter,
    LocationFilter,
    MediaItem,
    MediaItemFilter,
    MediaType,
    Name,
    ObjectId,
    Person,
    PersonFilter,
    License,
    is_valid_network_name,
)


@dataclass(frozen=True, slots=True)
class Violation:
    path: str
    rule: str
    message: str


def _join(prefix: str, name: str) -> str:
    return f"{prefix}.{name}" if prefix else name


def validate(obj) -> list[Violation]:
    """Check every invariant of a canonical object, including nested ones.

    Raises TypeError for non-canonical input; violations in the data are
    returned, never raised.
    """
    out: list[Violation] = []
    _validate_into(obj, "", out)
    return out


def _validate_into(obj, path: str, out: list[Violation]) -> None:
    if isinstance(obj, ObjectId):
        _check_object_id(obj, path, out)
    elif isinstance(obj, Name):
        _check_name(obj, path, out)
    elif isinstance(obj, Address):
        _check_address(obj, path, out)
    elif isinstance(obj, License):
        pass
    elif isinstance(obj, Person):
        _check_person(obj, path, out)
    elif isinstance(obj, MediaItem):
        _check_media_item(obj, path, out)
    elif isinstance(obj, Activity):
        _check_activity(obj, path, out)
    elif isinstance(obj, Comment):
        _check_comment(obj, path, out)
    elif isinstance(obj, DateTimeFilter):
        if obj.from_ is not None and obj.to is not None and obj.from_ > obj.to:
            out.append(Violation(_join(path, "from"), "from-after-to", "from is after to"))
    elif isinstance(obj, AreaFilter):
        if obj.radius is None or obj.radius <= 0:
            out.append(Violation(_join(path, "radius"), "radius-not-positive", "radius must be > 0 km"))
    elif isinstance(obj, AddressFilter):
        pass
    elif isinstance(obj, LocationFilter):
        if obj.addressFilter is None and obj.areaFilter is None:
            out.append(Violation(path or ".", "empty-location-filter",
                                 "at least one of addressFilter/areaFilter required"))
        _opt(obj.addressFilter, _join(path, "addressFilter"), out)
        _opt(obj.areaFilter, _join(path, "areaFilter"), out)
    elif isinstance(obj, PersonFilter):
        _check_sns_list(obj.sns, path, out)
    elif isinstance(obj, MediaItemFilter):
        _opt(obj.created, _join(path, "created"), out)
        _opt(obj.location, _join(path, "location"), out)
        _check_sns_list(obj.sns, path, out)
    elif isinstance(obj, ActivityFilter):
        _check_sns_list(obj.sns, path, out)
    else:
        raise TypeError(f"not a canonical type: {type(obj).__name__}")


def _opt(obj, path: str, out: list[Violation]) -> None:
    if obj is not None:
        _validate_into(obj, path, out)


def _check_network_token(value, path: str, out: list[Violation]) -> None:
    if not is_valid_network_name(value):
        out.append(Violation(path, "bad-network-token",
                             f"not a lowercase network token: {value!r}"))


def _check_sns_list(sns, path: str, out: list[Violation]) -> None:
    for i, name in enumerate(sns):
        _check_network_token(name, _join(path, f"sns[{i}]"), out)


def _check_count(value, path: str, out: list[Violation]) -> None:
    if value is not None and value < 0:
        out.append(Violation(path, "negative-count", "count must be >= 0"))


def _check_object_id(oid: ObjectId, path: str, out: list[Violation]) -> None:
    if not oid.id:
        out.append(Violation(_join(path, "id"), "empty-id", "object id must be nonempty"))
    _check_network_token(oid.socialNetwork, _join(path, "socialNetwork"), out)


def _check_name(name: Name, path: str, out: list[Violation]) -> None:
    if all(v is None for v in (name.firstName, name.lastName, name.additionalName, name.fullName)):
        out.append(Violation(path or ".", "empty-name", "at least one name field required"))


def _check_address(addr: Address, path: str, out: list[Violation]) -> None:
    if addr.latitude is not None and not -90 <= addr.latitude <= 90:
        out.append(Violation(_join(path, "latitude"), "latitude-range",
                             "latitude must be within [-90, 90]"))
    if addr.longitude is not None and not -180 <= addr.longitude <= 180:
        out.append(Violation(_join(path, "longitude"), "longitude-range",
                             "longitude must be within [-180, 180]"))


def _check_sn_consistency(obj, path: str, out: list[Violation]) -> None:
    _check_object_id(obj.id, _join(path, "id"), out)
    _check_network_token(obj.sn, _join(path, "sn"), out)
    if obj.id.socialNetwork != obj.sn:
        out.append(Violation(_join(path, "sn"), "sn-mismatch",
                             "mismatch with id.socialNetwork"))


def _check_person(p: Person, path: str, out: list[Violation]) -> None:
    _check_sn_consistency(p, path, out)
    for i, addr in enumerate(p.addresses):
        _check_address(addr, _join(path, f"addresses[{i}]"), out)
    _opt(p.currentLocation, _join(path, "currentLocation"), out)
    _opt(p.name, _join(path, "name"), out)
    for attr in ("numFriends", "inDegree", "outDegree"):
        _check_count(getattr(p, attr), _join(path, attr), out)


def _check_media_item(m: MediaItem, path: str, out: list[Violation]) -> None:
    _check_sn_consistency(m, path, out)
    if not isinstance(m.type, MediaType):
        out.append(Violation(_join(path, "type"), "missing-type",
                             "type must be one of TEXT, IMAGE, VIDEO"))
    if m.userId is not None:
        _check_object_id(m.userId, _join(path, "userId"), out)
        if m.userId.socialNetwork != m.sn:
            out.append(Violation(_join(path, "userId"), "nested-sn-mismatch",
                                 "userId.socialNetwork differs from sn"))
    for i, oid in enumerate(m.taggedPeople):
        p = _join(path, f"taggedPeople[{i}]")
        _check_object_id(oid, p, out)
        if oid.socialNetwork != m.sn:
            out.append(Violation(p, "nested-sn-mismatch",
                                 "taggedPeople entry belongs to another network"))
    _opt(m.location, _join(path, "location"), out)
    if m.duration is not None and m.duration < 0:
        out.append(Violation(_join(path, "duration"), "negative-count", "duration must be >= 0"))
    for attr in ("fileSize", "numRatings", "numPositiveVotes", "numNegativeVotes",
                 "numComments", "numViews", "numResharings", "numFavorites"):
        _check_count(getattr(m, attr), _join(path, attr), out)
    for i, c in enumerate(m.comments):
        _check_comment(c, _join(path, f"comments[{i}]"), out)


def _check_activity(a: Activity, path: str, out: list[Violation]) -> None:
    _check_sn_consistency(a, path, out)
    _opt(a.location, _join(path, "location"), out)
    if a.actorId is not None:
        _check_object_id(a.actorId, _join(path, "actorId"), out)
    for coll, checker in (("mediaItems", _check_media_item),
                          ("persons", _check_person),
                          ("activities", _check_activity)):
        for i, nested in enumerate(getattr(a, coll)):
            p = _join(path, f"{coll}[{i}]")
            if nested.sn != a.sn:
                out.append(Violation(_join(p, "sn"), "nested-sn-mismatch",
                                     "nested object belongs to another network"))
            checker(nested, p, out)


def _check_comment(c: Comment, path: str, out: list[Violation]) -> None:
    _check_sn_consistency(c, path, out)
    if c.userId is not None:
        _check_object_id(c.userId, _join(path, "userId"), out)
    _check_count(c.numPositiveVotes, _join(path, "numPositiveVotes"), out)
