"""Canonical object model: the shared vocabulary every backend is mapped into.

All types are immutable value objects. Constructors normalize list inputs
to tuples but never enforce semantic rules; those are checked by
`socios.model.validation.validate`, which reports violations as data.
Timestamps are integer epoch milliseconds UTC throughout.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from datetime import date
from enum import Enum

NETWORK_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

# Lowercase token naming a backend, e.g. "chirper". Must be registered to
# be usable in a request.
SocialNetworkId = str


def is_valid_network_name(name: object) -> bool:
    return isinstance(name, str) and bool(NETWORK_NAME_RE.match(name))


class MediaType(Enum):
    TEXT = "TEXT"
    IMAGE = "IMAGE"
    VIDEO = "VIDEO"


def _freeze(obj: object, *names: str) -> None:
    # Frozen dataclasses: normalize sequence fields to tuples in __post_init__.
    for n in names:
        object.__setattr__(obj, n, tuple(getattr(obj, n)))


@dataclass(frozen=True, slots=True)
class ObjectId:
    """Addresses one object inside one backend; `id` is backend-native and
    round-tripped verbatim, never parsed by the core."""

    id: str
    socialNetwork: SocialNetworkId


@dataclass(frozen=True, slots=True)
class Name:
    firstName: str | None = None
    lastName: str | None = None
    additionalName: str | None = None
    fullName: str | None = None


@dataclass(frozen=True, slots=True)
class Address:
    country: str | None = None
    extendedAddress: str | None = None
    latitude: float | None = None
    longitude: float | None = None
    postalCode: str | None = None
    region: str | None = None
    streetAddress: str | None = None


@dataclass(frozen=True, slots=True)
class License:
    licenseType: str | None = None
    name: str | None = None
    url: str | None = None


@dataclass(frozen=True, slots=True)
class Person:
    """A user profile as exposed by one backend. The same human on two
    networks is two Person objects; no cross-network identity resolution."""

    id: ObjectId
    sn: SocialNetworkId
    aboutMe: str | None = None
    addresses: tuple[Address, ...] = ()
    birthday: date | None = None
    currentLocation: Address | None = None
    username: str | None = None
    email: str | None = None
    gender: str | None = None
    name: Name | None = None
    photos: tuple[str, ...] = ()
    profileUrl: str | None = None
    memberSince: int | None = None
    thumbnailUrl: str | None = None
    utcOffset: int | None = None
    numFriends: int | None = None
    inDegree: int | None = None
    outDegree: int | None = None

    def __post_init__(self):
        _freeze(self, "addresses", "photos")


@dataclass(frozen=True, slots=True)
class Comment:
    id: ObjectId
    sn: SocialNetworkId
    created: int | None = None
    description: str | None = None
    userId: ObjectId | None = None
    username: str | None = None
    numPositiveVotes: int | None = None


@dataclass(frozen=True, slots=True)
class MediaItem:
    """A published post: video, image or text."""

    id: ObjectId
    sn: SocialNetworkId
    type: MediaType
    created: int | None = None
    title: str | None = None
    thumbnailUrl: str | None = None
    description: str | None = None
    duration: float | None = None
    location: Address | None = None
    language: str | None = None
    license: License | None = None
    fileSize: int | None = None
    rating: float | None = None
    numRatings: int | None = None
    numPositiveVotes: int | None = None
    numNegativeVotes: int | None = None
    numComments: int | None = None
    numViews: int | None = None
    numResharings: int | None = None
    numFavorites: int | None = None
    tags: tuple[str, ...] = ()
    taggedPeople: tuple[ObjectId, ...] = ()
    url: str | None = None
    userId: ObjectId | None = None
    comments: tuple[Comment, ...] = ()

    def __post_init__(self):
        _freeze(self, "tags", "taggedPeople", "comments")


@dataclass(frozen=True, slots=True)
class Activity:
    """An action performed by a user, with the objects it involved nested."""

    id: ObjectId
    sn: SocialNetworkId
    created: int | None = None
    title: str | None = None
    description: str | None = None
    location: Address | None = None
    actorId: ObjectId | None = None
    objectType: str | None = None
    mediaItems: tuple[MediaItem, ...] = ()
    persons: tuple[Person, ...] = ()
    activities: tuple["Activity", ...] = ()

    def __post_init__(self):
        _freeze(self, "mediaItems", "persons", "activities")


@dataclass(frozen=True, slots=True)
class DateTimeFilter:
    from_: int | None = None
    to: int | None = None


@dataclass(frozen=True, slots=True)
class AreaFilter:
    latitude: float
    longitude: float
    radius: float


@dataclass(frozen=True, slots=True)
class AddressFilter:
    country: str | None = None
    postalCode: str | None = None
    region: str | None = None


@dataclass(frozen=True, slots=True)
class LocationFilter:
    addressFilter: AddressFilter | None = None
    areaFilter: AreaFilter | None = None


@dataclass(frozen=True, slots=True)
class PersonFilter:
    keywords: tuple[str, ...] = ()
    sns: tuple[SocialNetworkId, ...] = ()

    def __post_init__(self):
        _freeze(self, "keywords", "sns")


@dataclass(frozen=True, slots=True)
class MediaItemFilter:
    created: DateTimeFilter | None = None
    keywords: tuple[str, ...] = ()
    location: LocationFilter | None = None
    language: str | None = None
    licenseType: str | None = None
    sns: tuple[SocialNetworkId, ...] = ()

    def __post_init__(self):
        _freeze(self, "keywords", "sns")


@dataclass(frozen=True, slots=True)
class ActivityFilter:
    keywords: tuple[str, ...] = ()
    language: str | None = None
    sns: tuple[SocialNetworkId, ...] = ()

    def __post_init__(self):
        _freeze(self, "keywords", "sns")


# Every type `validate`/`serialize_canonical` accepts, keyed by wire kind name.
CANONICAL_TYPES: dict[str, type] = {
    "ObjectId": ObjectId,
    "Name": Name,
    "Address": Address,
    "License": License,
    "Person": Person,
    "MediaItem": MediaItem,
    "Activity": Activity,
    "Comment": Comment,
    "DateTimeFilter": DateTimeFilter,
    "AreaFilter": AreaFilter,
    "AddressFilter": AddressFilter,
    "LocationFilter": LocationFilter,
    "PersonFilter": PersonFilter,
    "MediaItemFilter": MediaItemFilter,
    "ActivityFilter": ActivityFilter,
}

KIND_BY_TYPE: dict[type, str] = {t: k for k, t in CANONICAL_TYPES.items()}
