"""Seeded random generators for valid canonical instances and filters.

Used by round-trip/property tests and by the randomized acceptance runs.
All generators take a random.Random so every test run is reproducible.
"""
from __future__ import annotations

from datetime import date
from random import Random

from socios.model.types import (
    Activity,
    ActivityFilter,
    Address,
    AddressFilter,
    AreaFilter,
    Comment,
    DateTimeFilter,
    License,
    LocationFilter,
    MediaItem,
    MediaItemFilter,
    MediaType,
    Name,
    ObjectId,
    Person,
    PersonFilter,
)

NETWORKS = ["chirper", "picshare", "streamhub", "facebook", "twitter"]

_WORDS = ["sunset", "beach", "night", "coffee", "harbor", "музика", "φως", "東京",
          "rain", "café", "emoji😀", "a,b", "tab\tsep", 'quo"te', "sla\\sh"]


def _s(rng: Random) -> str:
    return rng.choice(_WORDS) + str(rng.randrange(1000))


def _maybe(rng: Random, value, p: float = 0.6):
    return value if rng.random() < p else None


def _ts(rng: Random) -> int:
    # Occasionally include sub-second precision to exercise ".mmmZ".
    ms = rng.randrange(0, 2_000_000_000) * 1000
    if rng.random() < 0.3:
        ms += rng.randrange(1, 1000)
    return ms


def objectid(rng: Random, network: str | None = None) -> ObjectId:
    return ObjectId(_s(rng), network or rng.choice(NETWORKS))


def name(rng: Random) -> Name:
    fields = {
        "firstName": _maybe(rng, _s(rng)),
        "lastName": _maybe(rng, _s(rng)),
        "additionalName": _maybe(rng, _s(rng), 0.2),
        "fullName": _maybe(rng, _s(rng)),
    }
    if all(v is None for v in fields.values()):
        fields["fullName"] = _s(rng)
    return Name(**fields)


def address(rng: Random) -> Address:
    return Address(
        country=_maybe(rng, rng.choice(["FR", "GR", "JP", "US"])),
        extendedAddress=_maybe(rng, _s(rng), 0.2),
        latitude=_maybe(rng, round(rng.uniform(-90, 90), 6)),
        longitude=_maybe(rng, round(rng.uniform(-180, 180), 6)),
        postalCode=_maybe(rng, str(rng.randrange(100000))),
        region=_maybe(rng, _s(rng)),
        streetAddress=_maybe(rng, _s(rng)),
    )


def license_(rng: Random) -> License:
    return License(
        licenseType=_maybe(rng, rng.choice(["cc-by", "cc0", "standard"])),
        name=_maybe(rng, _s(rng)),
        url=_maybe(rng, f"https://example.test/{_s(rng)}"),
    )


def person(rng: Random, network: str | None = None) -> Person:
    sn = network or rng.choice(NETWORKS)
    return Person(
        id=objectid(rng, sn),
        sn=sn,
        aboutMe=_maybe(rng, _s(rng)),
        addresses=tuple(address(rng) for _ in range(rng.randrange(3))),
        birthday=_maybe(rng, date(rng.randrange(1950, 2010), rng.randrange(1, 13),
                                  rng.randrange(1, 28)), 0.4),
        currentLocation=_maybe(rng, address(rng), 0.4),
        username=_maybe(rng, _s(rng)),
        email=_maybe(rng, f"{rng.randrange(10 ** 6)}@mail.test", 0.4),
        gender=_maybe(rng, rng.choice(["female", "male", "nonbinary"]), 0.3),
        name=_maybe(rng, name(rng)),
        photos=tuple(f"https://example.test/{i}.jpg" for i in range(rng.randrange(3))),
        profileUrl=_maybe(rng, f"https://example.test/u/{rng.randrange(1000)}"),
        memberSince=_maybe(rng, _ts(rng)),
        thumbnailUrl=_maybe(rng, f"https://example.test/t/{rng.randrange(1000)}.png", 0.4),
        utcOffset=_maybe(rng, rng.choice([-600, -330, 0, 60, 330, 570]), 0.4),
        numFriends=_maybe(rng, rng.randrange(10_000), 0.4),
        inDegree=_maybe(rng, rng.randrange(10_000), 0.4),
        outDegree=_maybe(rng, rng.randrange(10_000), 0.4),
    )


def comment(rng: Random, network: str | None = None) -> Comment:
    sn = network or rng.choice(NETWORKS)
    return Comment(
        id=objectid(rng, sn),
        sn=sn,
        created=_maybe(rng, _ts(rng)),
        description=_maybe(rng, _s(rng)),
        userId=_maybe(rng, objectid(rng, sn)),
        username=_maybe(rng, _s(rng)),
        numPositiveVotes=_maybe(rng, rng.randrange(5000), 0.4),
    )


def media_item(rng: Random, network: str | None = None) -> MediaItem:
    sn = network or rng.choice(NETWORKS)
    return MediaItem(
        id=objectid(rng, sn),
        sn=sn,
        type=rng.choice(list(MediaType)),
        created=_maybe(rng, _ts(rng)),
        title=_maybe(rng, _s(rng)),
        thumbnailUrl=_maybe(rng, f"https://example.test/{rng.randrange(99)}.jpg", 0.4),
        description=_maybe(rng, _s(rng)),
        duration=_maybe(rng, round(rng.uniform(0, 7200), 3), 0.3),
        location=_maybe(rng, address(rng), 0.3),
        language=_maybe(rng, rng.choice(["en", "fr", "el"]), 0.4),
        license=_maybe(rng, license_(rng), 0.3),
        fileSize=_maybe(rng, rng.randrange(10 ** 9), 0.3),
        rating=_maybe(rng, round(rng.uniform(0, 10), 2), 0.3),
        numRatings=_maybe(rng, rng.randrange(1000), 0.3),
        numPositiveVotes=_maybe(rng, rng.randrange(1000), 0.3),
        numNegativeVotes=_maybe(rng, rng.randrange(1000), 0.3),
        numComments=_maybe(rng, rng.randrange(1000), 0.3),
        numViews=_maybe(rng, rng.randrange(10 ** 7), 0.3),
        numResharings=_maybe(rng, rng.randrange(1000), 0.3),
        numFavorites=_maybe(rng, rng.randrange(1000), 0.3),
        tags=tuple(_s(rng) for _ in range(rng.randrange(4))),
        taggedPeople=tuple(objectid(rng, sn) for _ in range(rng.randrange(3))),
        url=_maybe(rng, f"https://example.test/m/{rng.randrange(999)}"),
        userId=_maybe(rng, objectid(rng, sn)),
        comments=tuple(comment(rng, sn) for _ in range(rng.randrange(3))),
    )


def activity(rng: Random, network: str | None = None, depth: int = 0) -> Activity:
    sn = network or rng.choice(NETWORKS)
    nested = ()
    if depth == 0 and rng.random() < 0.3:
        nested = tuple(activity(rng, sn, depth + 1) for _ in range(rng.randrange(1, 3)))
    return Activity(
        id=objectid(rng, sn),
        sn=sn,
        created=_maybe(rng, _ts(rng)),
        title=_maybe(rng, _s(rng)),
        description=_maybe(rng, _s(rng)),
        location=_maybe(rng, address(rng), 0.3),
        actorId=_maybe(rng, objectid(rng, sn)),
        objectType=_maybe(rng, rng.choice(["UPLOAD", "LIKE", "SHARE"]), 0.5),
        mediaItems=tuple(media_item(rng, sn) for _ in range(rng.randrange(3))),
        persons=tuple(person(rng, sn) for _ in range(rng.randrange(3))),
        activities=nested,
    )


def datetime_filter(rng: Random) -> DateTimeFilter:
    a, b = sorted((_ts(rng), _ts(rng)))
    choice = rng.random()
    if choice < 0.4:
        return DateTimeFilter(from_=a, to=b)
    if choice < 0.7:
        return DateTimeFilter(from_=a)
    return DateTimeFilter(to=b)


def area_filter(rng: Random) -> AreaFilter:
    return AreaFilter(
        latitude=round(rng.uniform(-90, 90), 6),
        longitude=round(rng.uniform(-180, 180), 6),
        radius=round(rng.uniform(0.1, 2000), 3),
    )


def address_filter(rng: Random) -> AddressFilter:
    return AddressFilter(
        country=_maybe(rng, rng.choice(["FR", "GR", "JP"])),
        postalCode=_maybe(rng, str(rng.randrange(99999)), 0.3),
        region=_maybe(rng, _s(rng), 0.3),
    )


def location_filter(rng: Random) -> LocationFilter:
    which = rng.random()
    if which < 0.4:
        return LocationFilter(areaFilter=area_filter(rng))
    if which < 0.7:
        return LocationFilter(addressFilter=address_filter(rng))
    return LocationFilter(addressFilter=address_filter(rng), areaFilter=area_filter(rng))


def person_filter(rng: Random) -> PersonFilter:
    return PersonFilter(
        keywords=tuple(_s(rng) for _ in range(rng.randrange(1, 4))),
        sns=tuple(rng.sample(NETWORKS, rng.randrange(3))),
    )


def media_item_filter(rng: Random) -> MediaItemFilter:
    flt = MediaItemFilter(
        created=_maybe(rng, datetime_filter(rng), 0.4),
        keywords=tuple(_s(rng) for _ in range(rng.randrange(3))),
        location=_maybe(rng, location_filter(rng), 0.3),
        language=_maybe(rng, rng.choice(["en", "fr"]), 0.3),
        licenseType=_maybe(rng, "cc-by", 0.2),
        sns=tuple(rng.sample(NETWORKS, rng.randrange(3))),
    )
    if not (flt.created or flt.keywords or flt.location or flt.language or flt.licenseType):
        flt = MediaItemFilter(keywords=(_s(rng),), sns=flt.sns)
    return flt


def activity_filter(rng: Random) -> ActivityFilter:
    return ActivityFilter(
        keywords=tuple(_s(rng) for _ in range(rng.randrange(1, 3))),
        language=_maybe(rng, rng.choice(["en", "el"]), 0.3),
        sns=tuple(rng.sample(NETWORKS, rng.randrange(3))),
    )


GENERATORS = {
    "ObjectId": objectid,
    "Name": name,
    "Address": address,
    "License": license_,
    "Person": person,
    "MediaItem": media_item,
    "Activity": activity,
    "Comment": comment,
    "DateTimeFilter": datetime_filter,
    "AreaFilter": area_filter,
    "AddressFilter": address_filter,
    "LocationFilter": location_filter,
    "PersonFilter": person_filter,
    "MediaItemFilter": media_item_filter,
    "ActivityFilter": activity_filter,
}


def any_canonical(rng: Random):
    kind = rng.choice(list(GENERATORS))
    return kind, GENERATORS[kind](rng)
