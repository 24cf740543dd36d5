"""picshare: a photo-sharing mock network.

Native schema: camelCase field names, ISO-8601 string timestamps. Photos
carry geo spots, labels, licenses and tagged people; galleries act as
pages; text "notes" cover message posting. No activities.
findPersonsByMediaItem semantics here: owner plus every tagged person.
"""
from __future__ import annotations

from ..geo import haversine_km
from ..isotime import iso_to_ms, ms_to_iso, now_ms
from .fixtures import (
    DEFAULT_SEED,
    full_name,
    pick_place,
    pick_tags,
    pick_ts_ms,
    sentence,
    rng_for,
)
from .server import HttpError, MockNetworkApp

MAX_NOTE_CHARS = 2_000

_LICENSES = [
    {"kind": "cc-by", "title": "Attribution", "link": "https://licenses.example/cc-by"},
    {"kind": "cc-by-sa", "title": "Attribution-ShareAlike", "link": "https://licenses.example/cc-by-sa"},
    {"kind": "cc0", "title": "Public Domain", "link": "https://licenses.example/cc0"},
    {"kind": "all-rights", "title": "All Rights Reserved", "link": "https://licenses.example/arr"},
]

_STATUS_CODES = {400: "BAD_REQUEST", 401: "UNAUTHORIZED", 403: "FORBIDDEN",
                 404: "NOT_FOUND", 429: "RATE_LIMITED", 500: "SERVER_ERROR"}


def generate(seed: int) -> dict:
    rng = rng_for("picshare", seed)
    members: dict[str, dict] = {}
    n_members = rng.randint(45, 52)
    for i in range(1, n_members + 1):
        mid = f"p{i}"
        first, last = full_name(rng)
        nick = f"{last}_{first[:3]}{rng.randint(1, 99)}"
        _, country, region, postal, street, lat, lon = pick_place(rng)
        birth_ms = rng.randrange(0, 1_009_843_200_000)  # 1970..2002
        members[mid] = {
            "memberId": mid,
            "nick": nick,
            "firstName": first.capitalize(),
            "lastName": last.capitalize(),
            "fullName": f"{first.capitalize()} {last.capitalize()}",
            "bio": sentence(rng, []),
            "joinedOn": ms_to_iso(pick_ts_ms(rng)),
            "birthDate": ms_to_iso(birth_ms // 86_400_000 * 86_400_000)[:10],
            "genderIdentity": rng.choice(["female", "male", "nonbinary"]),
            "mail": f"{nick}@mail.example",
            "contactCount": 0,
            "avatar": f"https://picshare.example/avatars/{mid}.jpg",
            "pageUrl": f"https://picshare.example/people/{nick}",
            "shots": [
                f"https://picshare.example/shots/{mid}-{k}.jpg"
                for k in range(rng.randint(0, 3))
            ],
            "homeBase": {
                "countryCode": country,
                "area": region,
                "zip": postal,
                "street": street,
                "latitude": lat,
                "longitude": lon,
            },
        }

    mids = list(members)
    contacts: dict[str, dict] = {}
    for mid in mids:
        others = [m for m in mids if m != mid]
        public = rng.sample(others, rng.randint(3, 8))
        rest = [m for m in others if m not in public]
        private = rng.sample(rest, rng.randint(0, 3))
        contacts[mid] = {"public": public, "private": private}
        members[mid]["contactCount"] = len(public)

    items: dict[str, dict] = {}
    n_items = rng.randint(190, 210)
    for i in range(1, n_items + 1):
        iid = f"m{i}"
        owner = rng.choice(mids)
        labels = pick_tags(rng)
        is_note = rng.random() < 0.15 and i > 5  # the first few ids stay photos
        record = {
            "itemId": iid,
            "ownerId": owner,
            "kind": "note" if is_note else "photo",
            "caption": None if is_note else sentence(rng, labels, 4),
            "note": sentence(rng, labels),
            "takenAt": ms_to_iso(pick_ts_ms(rng)),
            "labels": labels,
            "peopleTagged": rng.sample([m for m in mids if m != owner], rng.randint(0, 3)),
            "likes": rng.randint(0, 900),
            "dislikes": rng.randint(0, 40),
            "commentCount": 0,
            "viewCount": rng.randint(5, 40_000),
            "favCount": rng.randint(0, 300),
            "rateCount": rng.randint(0, 120),
            "stars": round(rng.uniform(1.0, 5.0), 1),
            "lang": rng.choice(["en", "fr", "de", "el", "es", "ja"]),
        }
        if not is_note:
            _, country, region, postal, _, lat, lon = pick_place(rng)
            record["spot"] = (
                {"latitude": lat, "longitude": lon, "countryCode": country,
                 "area": region, "zip": postal}
                if rng.random() < 0.8 else None
            )
            record["license"] = rng.choice(_LICENSES) if rng.random() < 0.75 else None
            record["bytes"] = rng.randint(200_000, 9_000_000)
            record["image"] = f"https://picshare.example/full/{iid}.jpg"
            record["thumb"] = f"https://picshare.example/thumb/{iid}.jpg"
        else:
            record["spot"] = None
            record["license"] = None
            record["bytes"] = None
            record["image"] = None
            record["thumb"] = None
        items[iid] = record

    comments: dict[str, dict] = {}
    cid = 0
    for iid, item in items.items():
        for _ in range(rng.choice([0, 0, 1, 1, 2, 3])):
            cid += 1
            author = rng.choice(mids)
            comments[f"c{cid}"] = {
                "commentId": f"c{cid}",
                "itemId": iid,
                "memberId": author,
                "nick": members[author]["nick"],
                "body": sentence(rng, []),
                "writtenAt": ms_to_iso(pick_ts_ms(rng)),
                "likes": rng.randint(0, 60),
            }
            item["commentCount"] += 1

    photo_ids = [i for i, rec in items.items() if rec["kind"] == "photo"]
    galleries: dict[str, dict] = {}
    for g in range(1, rng.randint(8, 11)):
        gid = f"g{g}"
        galleries[gid] = {
            "galleryId": gid,
            "title": sentence(rng, [], 3),
            "itemIds": rng.sample(photo_ids, rng.randint(3, 6)),
        }

    return {
        "members": members,
        "items": items,
        "comments": comments,
        "galleries": galleries,
        "contacts": contacts,
        "counters": {"item": n_items},
    }


class PicshareApp(MockNetworkApp):
    name = "picshare"

    def __init__(self, seed: int = DEFAULT_SEED):
        super().__init__(seed)
        self.reset()

    def reset(self) -> None:
        data = generate(self.seed)
        self.members = data["members"]
        self.items = data["items"]
        self.comments = data["comments"]
        self.galleries = data["galleries"]
        self.contacts = data["contacts"]
        self.counters = data["counters"]

    def subject_exists(self, subject: str) -> bool:
        return subject in self.members

    def error_body(self, status: int, message: str) -> dict:
        return {"errorCode": _STATUS_CODES.get(status, "ERROR"), "errorMessage": message}

    # -- native routes -------------------------------------------------------

    def handle(self, method, parts, params, bearer, body):
        if method == "GET":
            return self._handle_get(parts, params, bearer)
        if method == "POST" and parts == ["items"]:
            return self._create_note(bearer, body or {})
        raise HttpError(404, f"no such route: {method} /{'/'.join(parts)}")

    def _handle_get(self, parts, params, bearer):
        match parts:
            case ["members", "search"]:
                return 200, {"members": self._search_members(params.get("who", ""))}
            case ["members", "by_nick", nick]:
                for member in self.members.values():
                    if member["nick"] == nick:
                        return 200, member
                raise HttpError(404, f"no member with nick {nick!r}")
            case ["members", mid]:
                return 200, self._member(mid)
            case ["members", mid, "contacts"]:
                self._member(mid)
                return 200, {"members": [self._member(c) for c in self.contacts[mid]["public"]]}
            case ["members", mid, "contacts", "all"]:
                self._member(mid)
                self.require_own_data(bearer, mid)
                edges = self.contacts[mid]
                return 200, {"members": [self._member(c) for c in edges["public"] + edges["private"]]}
            case ["members", mid, "items"]:
                self._member(mid)
                return 200, {"items": [i for i in self.items.values() if i["ownerId"] == mid]}
            case ["items", "search"]:
                return 200, {"items": self._search_items(params)}
            case ["items", iid]:
                item = dict(self._item(iid))
                item["comments"] = [c for c in self.comments.values() if c["itemId"] == iid]
                return 200, item
            case ["items", iid, "similar"]:
                return 200, {"items": self._similar(iid)}
            case ["items", iid, "people"]:
                item = self._item(iid)
                people = [self._member(item["ownerId"])]
                people += [self._member(m) for m in item["peopleTagged"]]
                return 200, {"members": people}
            case ["items", iid, "comments"]:
                self._item(iid)
                return 200, {"comments": [c for c in self.comments.values() if c["itemId"] == iid]}
            case ["comments", cid]:
                comment = self.comments.get(cid)
                if comment is None:
                    raise HttpError(404, f"no comment {cid!r}")
                return 200, comment
            case ["galleries", gid, "items"]:
                gallery = self.galleries.get(gid)
                if gallery is None:
                    raise HttpError(404, f"no gallery {gid!r}")
                return 200, {"items": [self.items[i] for i in gallery["itemIds"] if i in self.items]}
        raise HttpError(404, f"no such route: GET /{'/'.join(parts)}")

    def _member(self, mid: str) -> dict:
        member = self.members.get(mid)
        if member is None:
            raise HttpError(404, f"no member {mid!r}")
        return member

    def _item(self, iid: str) -> dict:
        item = self.items.get(iid)
        if item is None:
            raise HttpError(404, f"no item {iid!r}")
        return item

    def _search_members(self, who: str) -> list[dict]:
        needles = [k.casefold() for k in who.split(",") if k]
        if not needles:
            return []
        out = []
        for member in self.members.values():
            hay = f"{member['nick']} {member['fullName']}".casefold()
            if any(n in hay for n in needles):
                out.append(member)
        return out

    def _search_items(self, params) -> list[dict]:
        needles = [k.casefold() for k in params.get("match", "").split(",") if k]
        after = _iso_param(params, "takenAfter")
        before = _iso_param(params, "takenBefore")
        near = None
        if "nearLat" in params or "nearLon" in params or "withinKm" in params:
            near = (_float_param(params, "nearLat"), _float_param(params, "nearLon"),
                    _float_param(params, "withinKm"))
            if any(v is None for v in near):
                raise HttpError(400, "nearLat, nearLon and withinKm must be given together")
        out = []
        for item in self.items.values():
            if needles:
                hay = " ".join(filter(None, [item["caption"], item["note"],
                                             " ".join(item["labels"])])).casefold()
                if not any(n in hay for n in needles):
                    continue
            taken = iso_to_ms(item["takenAt"])
            if after is not None and taken < after:
                continue
            if before is not None and taken > before:
                continue
            if near is not None:
                spot = item.get("spot")
                if spot is None:
                    continue
                dist = haversine_km(near[0], near[1], spot["latitude"], spot["longitude"])
                if dist > near[2]:
                    continue
            if not _spot_matches(item.get("spot"), params):
                continue
            if "lang" in params and item["lang"] != params["lang"]:
                continue
            if "license" in params:
                lic = item.get("license")
                if lic is None or lic["kind"] != params["license"]:
                    continue
            out.append(item)
        return out

    def _similar(self, iid: str) -> list[dict]:
        seed_labels = set(self._item(iid)["labels"])
        scored = []
        for item in self.items.values():
            if item["itemId"] == iid:
                continue
            shared = len(seed_labels & set(item["labels"]))
            if shared:
                scored.append((shared, item))
        scored.sort(key=lambda pair: (-pair[0], pair[1]["itemId"]))
        return [item for _, item in scored]

    def _create_note(self, bearer, body) -> tuple[int, dict]:
        subject = self.authenticated_subject(bearer)
        text = body.get("note")
        if not isinstance(text, str) or not text:
            raise HttpError(400, "note must be a nonempty string")
        if len(text) > MAX_NOTE_CHARS:
            raise HttpError(400, f"note exceeds {MAX_NOTE_CHARS} characters")
        with self._state_lock:
            return 201, self._insert_note(subject, text)

    def _insert_note(self, owner: str, text: str) -> dict:
        self.counters["item"] += 1
        iid = f"m{self.counters['item']}"
        record = {
            "itemId": iid,
            "ownerId": owner,
            "kind": "note",
            "caption": None,
            "note": text,
            "takenAt": ms_to_iso(now_ms() // 1000 * 1000),
            "labels": [],
            "peopleTagged": [],
            "likes": 0,
            "dislikes": 0,
            "commentCount": 0,
            "viewCount": 0,
            "favCount": 0,
            "rateCount": 0,
            "stars": 0.0,
            "lang": "en",
            "spot": None,
            "license": None,
            "bytes": None,
            "image": None,
            "thumb": None,
        }
        self.items = {**self.items, iid: record}
        return record

    # -- harness mutations ---------------------------------------------------

    def mutate(self, op: dict) -> dict:
        kind = op.get("op")
        if kind == "add_media":
            owner = op.get("owner", "")
            if owner not in self.members:
                raise HttpError(404, f"no member {owner!r}")
            record = self._insert_note(owner, str(op.get("text", "")) or "mutation note")
            return {"id": record["itemId"]}
        if kind == "delete_media":
            target = op.get("id", "")
            if target not in self.items:
                raise HttpError(404, f"no item {target!r}")
            self.items = {k: v for k, v in self.items.items() if k != target}
            return {"deleted": target}
        raise HttpError(400, f"unknown mutation op {kind!r}")


def _spot_matches(spot: dict | None, params: dict) -> bool:
    wanted = {k: params[k] for k in ("country", "area", "zip") if k in params}
    if not wanted:
        return True
    if spot is None:
        return False
    native_keys = {"country": "countryCode", "area": "area", "zip": "zip"}
    return all(spot.get(native_keys[k]) == v for k, v in wanted.items())


def _iso_param(params: dict, name: str) -> int | None:
    raw = params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return iso_to_ms(raw)
    except ValueError:
        raise HttpError(400, f"{name} must be an ISO-8601 timestamp") from None


def _float_param(params: dict, name: str) -> float | None:
    raw = params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise HttpError(400, f"{name} must be a number") from None
