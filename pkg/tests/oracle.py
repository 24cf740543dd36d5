"""Independent brute-force search oracle.

Recomputes expected search results by scanning the mock networks' native
fixture records directly, never touching the adaptor pipeline. Distances
use a separately written atan2-form haversine. Expected results are
(id, network) pairs in the deterministic envelope order: networks in
request order (or registry-supporting order when sns is empty), native
insertion order within a network, capped at 100 per network.
"""
from __future__ import annotations

from math import atan2, cos, radians, sin, sqrt
from random import Random

from socios.isotime import iso_to_ms
from socios.mocknet.fixtures import CITIES, LANGUAGES, TAG_WORDS
from socios.model.types import (
    ActivityFilter,
    AddressFilter,
    AreaFilter,
    DateTimeFilter,
    LocationFilter,
    MediaItemFilter,
    PersonFilter,
)

MOCKS = ("chirper", "picshare", "streamhub")
SEARCH_CAP = 100

_LICENSE_KINDS = ["cc-by", "cc-by-sa", "cc0", "all-rights", "standard", "editorial"]


def haversine_atan2_km(lat1, lon1, lat2, lon2) -> float:
    # Deliberately a different formula arrangement than the shipped one.
    dphi = radians(lat2 - lat1)
    dlam = radians(lon2 - lon1)
    a = sin(dphi / 2) ** 2 + cos(radians(lat1)) * cos(radians(lat2)) * sin(dlam / 2) ** 2
    return 2 * 6371.0 * atan2(sqrt(a), sqrt(1 - a))


# -- per-network native views ------------------------------------------------

def _media_records(app):
    if app.name == "chirper":
        return list(app.posts.values())
    if app.name == "picshare":
        return list(app.items.values())
    return list(app.videos.values())


def _media_view(network: str, rec: dict) -> dict:
    """Uniform view of one native media record for clause checks."""
    if network == "chirper":
        return {
            "id": rec["post_id"],
            "hay": (rec["text"] + " " + " ".join(rec["hashtags"])).casefold(),
            "created": rec["posted_at"] * 1000,
            "spot": None,
            "lang": rec["lang_code"],
            "license": None,
        }
    if network == "picshare":
        spot = rec.get("spot")
        return {
            "id": rec["itemId"],
            "hay": " ".join(filter(None, [rec["caption"], rec["note"],
                                          " ".join(rec["labels"])])).casefold(),
            "created": iso_to_ms(rec["takenAt"]),
            "spot": None if spot is None else {
                "lat": spot["latitude"], "lon": spot["longitude"],
                "country": spot["countryCode"], "region": spot["area"],
                "postal": spot["zip"],
            },
            "lang": rec["lang"],
            "license": rec["license"]["kind"] if rec.get("license") else None,
        }
    spot = rec.get("Spot")
    return {
        "id": rec["VideoId"],
        "hay": " ".join([rec["Title"], rec["Summary"],
                         " ".join(rec["Keywords"])]).casefold(),
        "created": rec["PostedTime"],
        "spot": None if spot is None else {
            "lat": spot["Lat"], "lon": spot["Lon"], "country": spot["CountryCode"],
            "region": spot["Region"], "postal": spot["Postal"],
        },
        "lang": rec["Speech"],
        "license": rec["Rights"]["Code"] if rec.get("Rights") else None,
    }


def _matches_media(view: dict, flt: MediaItemFilter) -> bool:
    if flt.keywords and not any(k.casefold() in view["hay"] for k in flt.keywords):
        return False
    if flt.created is not None:
        if flt.created.from_ is not None and view["created"] < flt.created.from_:
            return False
        if flt.created.to is not None and view["created"] > flt.created.to:
            return False
    if flt.location is not None:
        spot = view["spot"]
        area = flt.location.areaFilter
        if area is not None:
            if spot is None:
                return False
            dist = haversine_atan2_km(area.latitude, area.longitude,
                                      spot["lat"], spot["lon"])
            if dist > area.radius:
                return False
        addr = flt.location.addressFilter
        if addr is not None:
            if spot is None:
                return False
            for field in ("country", "region"):
                wanted = getattr(addr, field)
                if wanted is not None and spot[field] != wanted:
                    return False
            if addr.postalCode is not None and spot["postal"] != addr.postalCode:
                return False
    if flt.language is not None and view["lang"] != flt.language:
        return False
    if flt.licenseType is not None and view["license"] != flt.licenseType:
        return False
    return True


def _effective_networks(sns, registry, method: str) -> list[str]:
    if sns:
        out = []
        for name in sns:
            if name not in out:
                out.append(name)
        return out
    return registry.networks_supporting(method)


def expected_media(stack, flt: MediaItemFilter) -> list[tuple[str, str]]:
    out = []
    for network in _effective_networks(flt.sns, stack.registry, "findMediaItems"):
        if network not in MOCKS:
            continue  # stubs contribute errors, never results
        app = stack.app(network)
        matched = [
            (_media_view(network, rec)["id"], network)
            for rec in _media_records(app)
            if _matches_media(_media_view(network, rec), flt)
        ]
        out.extend(matched[:SEARCH_CAP])
    return out


def expected_activities(stack, flt: ActivityFilter) -> list[tuple[str, str]]:
    out = []
    for network in _effective_networks(flt.sns, stack.registry, "findActivities"):
        if network != "streamhub":
            continue
        app = stack.app(network)
        matched = []
        for rec in app.events.values():
            hay = f"{rec['Caption']} {rec['Detail']}".casefold()
            if flt.keywords and not any(k.casefold() in hay for k in flt.keywords):
                continue
            if flt.language is not None and rec["Tongue"] != flt.language:
                continue
            matched.append((rec["EventId"], network))
        out.extend(matched[:SEARCH_CAP])
    return out


def expected_persons(stack, flt: PersonFilter) -> list[tuple[str, str]]:
    hays = {
        "chirper": lambda r: f"{r['handle']} {r['display_name']}".casefold(),
        "picshare": lambda r: f"{r['nick']} {r['fullName']}".casefold(),
        "streamhub": lambda r: f"{r['Handle']} {r['DisplayName']}".casefold(),
    }
    tables = {
        "chirper": lambda app: (app.users, "user_id"),
        "picshare": lambda app: (app.members, "memberId"),
        "streamhub": lambda app: (app.accounts, "AccountId"),
    }
    out = []
    for network in _effective_networks(flt.sns, stack.registry, "findPersons"):
        if network not in MOCKS:
            continue
        app = stack.app(network)
        table, id_key = tables[network](app)
        hay = hays[network]
        matched = [
            (rec[id_key], network)
            for rec in table.values()
            if any(k.casefold() in hay(rec) for k in flt.keywords)
        ]
        out.extend(matched[:SEARCH_CAP])
    return out


def expected_relevant(app, seed_id: str) -> list[str]:
    """Shared-tag relevance: >=1 shared tag, ordered by shared count desc
    then id asc, seed excluded."""
    if app.name == "chirper":
        records = [(r["post_id"], set(r["hashtags"])) for r in app.posts.values()]
    elif app.name == "picshare":
        records = [(r["itemId"], set(r["labels"])) for r in app.items.values()]
    else:
        records = [(r["VideoId"], set(r["Keywords"])) for r in app.videos.values()]
    seed_tags = dict(records)[seed_id]
    scored = [(len(seed_tags & tags), rid) for rid, tags in records
              if rid != seed_id and seed_tags & tags]
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    return [rid for _, rid in scored][:SEARCH_CAP]


# -- fixture-aware filter generation ------------------------------------------

_NAME_FRAGMENTS = ["al", "ber", "kov", "sa", "lar", "ros", "nik", "tan", "qu", "er"]


def fixture_media_filter(rng: Random) -> MediaItemFilter:
    keywords = tuple(rng.sample(TAG_WORDS, rng.randint(1, 3))) if rng.random() < 0.8 else ()
    if keywords and rng.random() < 0.3:
        keywords = tuple(k.upper() if rng.random() < 0.5 else k.capitalize()
                         for k in keywords)
    created = None
    if rng.random() < 0.4:
        lo = 1_356_998_400_000 + rng.randrange(0, 40_000_000_000)
        hi = lo + rng.randrange(1_000_000_000, 30_000_000_000)
        which = rng.random()
        created = (DateTimeFilter(from_=lo, to=hi) if which < 0.6
                   else DateTimeFilter(from_=lo) if which < 0.8
                   else DateTimeFilter(to=hi))
    location = None
    if rng.random() < 0.35:
        if rng.random() < 0.6:
            city = rng.choice(CITIES)
            location = LocationFilter(areaFilter=AreaFilter(
                latitude=city[5] + rng.uniform(-0.05, 0.05),
                longitude=city[6] + rng.uniform(-0.05, 0.05),
                radius=rng.choice([2, 5, 10, 25, 120]),
            ))
        else:
            city = rng.choice(CITIES)
            location = LocationFilter(addressFilter=AddressFilter(
                country=city[1],
                region=city[2] if rng.random() < 0.4 else None,
            ))
    language = rng.choice(LANGUAGES) if rng.random() < 0.3 else None
    license_type = rng.choice(_LICENSE_KINDS) if rng.random() < 0.25 else None
    sns = _pick_sns(rng, "findMediaItems")
    if not (keywords or created or location or language or license_type):
        keywords = (rng.choice(TAG_WORDS),)
    return MediaItemFilter(created=created, keywords=keywords, location=location,
                           language=language, licenseType=license_type, sns=sns)


def fixture_activity_filter(rng: Random) -> ActivityFilter:
    pool = ["upload", "like", "share", "comment", "subscribe"] + TAG_WORDS
    return ActivityFilter(
        keywords=tuple(rng.sample(pool, rng.randint(1, 2))),
        language=rng.choice(LANGUAGES) if rng.random() < 0.3 else None,
        sns=_pick_sns(rng, "findActivities"),
    )


def fixture_person_filter(rng: Random) -> PersonFilter:
    return PersonFilter(
        keywords=tuple(rng.sample(_NAME_FRAGMENTS, rng.randint(1, 2))),
        sns=_pick_sns(rng, "findPersons"),
    )


def _pick_sns(rng: Random, method: str) -> tuple[str, ...]:
    roll = rng.random()
    if roll < 0.35:
        return ()  # all supporting networks
    k = rng.randint(1, 3)
    picks = tuple(rng.sample(MOCKS, k))
    if roll > 0.9:
        picks += ("flickr",)  # stub: contributes an error, never results
    return picks
