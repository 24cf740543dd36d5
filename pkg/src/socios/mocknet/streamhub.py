"""streamhub: a video platform mock network with activity feeds.

Native schema: PascalCase field names, epoch-millisecond integer
timestamps, and the uploader account nested inside every video. Channels
act as pages; events are the native activities. No text posting.
findPersonsByMediaItem semantics here: uploader plus note authors.
"""
from __future__ import annotations

from ..geo import haversine_km
from ..isotime import now_ms
from .fixtures import (
    DEFAULT_SEED,
    full_name,
    pick_place,
    pick_tags,
    pick_ts_ms,
    rng_for,
    sentence,
)
from .server import HttpError, MockNetworkApp

_RIGHTS = [
    {"Code": "standard", "Label": "Standard License", "Terms": "https://streamhub.example/terms/standard"},
    {"Code": "cc-by", "Label": "Creative Commons Attribution", "Terms": "https://streamhub.example/terms/cc-by"},
    {"Code": "editorial", "Label": "Editorial Use Only", "Terms": "https://streamhub.example/terms/editorial"},
]

_EVENT_KINDS = ["UPLOAD", "LIKE", "SHARE", "COMMENT", "SUBSCRIBE"]


def generate(seed: int) -> dict:
    rng = rng_for("streamhub", seed)
    accounts: dict[str, dict] = {}
    n_accounts = rng.randint(45, 52)
    for i in range(1, n_accounts + 1):
        aid = f"u{i}"
        first, last = full_name(rng)
        handle = f"{first}{last}"[:12] + str(rng.randint(1, 9))
        _, country, region, postal, street, lat, lon = pick_place(rng)
        accounts[aid] = {
            "AccountId": aid,
            "Handle": handle,
            "DisplayName": f"{first.capitalize()} {last.capitalize()}",
            "About": sentence(rng, []),
            "SignupTime": pick_ts_ms(rng),
            "SubscriberTotal": 0,
            "SubscribedTotal": 0,
            "Avatar": f"https://streamhub.example/avatars/{aid}.png",
            "Portal": f"https://streamhub.example/c/{handle}",
            "Zone": rng.choice([-480, -420, -300, 0, 60, 120, 540]),
            "Base": {
                "CountryCode": country,
                "Region": region,
                "Postal": postal,
                "Street": street,
                "Lat": lat,
                "Lon": lon,
            },
        }

    aids = list(accounts)
    subs: dict[str, dict] = {}
    for aid in aids:
        others = [a for a in aids if a != aid]
        public = rng.sample(others, rng.randint(3, 8))
        rest = [a for a in others if a not in public]
        private = rng.sample(rest, rng.randint(0, 3))
        subs[aid] = {"public": public, "private": private}
    for aid in aids:
        accounts[aid]["SubscribedTotal"] = len(subs[aid]["public"])
        accounts[aid]["SubscriberTotal"] = sum(
            1 for other in aids if aid in subs[other]["public"]
        )

    videos: dict[str, dict] = {}
    n_videos = rng.randint(190, 210)
    for i in range(1, n_videos + 1):
        vid = f"v{i}"
        uploader = rng.choice(aids)
        keywords = pick_tags(rng)
        _, country, region, postal, _, lat, lon = pick_place(rng)
        videos[vid] = {
            "VideoId": vid,
            "Title": sentence(rng, keywords, 4),
            "Summary": sentence(rng, keywords),
            "PostedTime": pick_ts_ms(rng),
            "LengthSeconds": rng.randint(15, 7200),
            "Uploader": dict(accounts[uploader]),
            "Keywords": keywords,
            "Rights": rng.choice(_RIGHTS) if rng.random() < 0.8 else None,
            "PlayCount": rng.randint(0, 1_000_000),
            "UpVotes": rng.randint(0, 50_000),
            "DownVotes": rng.randint(0, 2_000),
            "CommentTotal": 0,
            "ShareTotal": rng.randint(0, 5_000),
            "SavedTotal": rng.randint(0, 9_000),
            "SizeBytes": rng.randint(5_000_000, 2_000_000_000),
            "Score": round(rng.uniform(0.0, 10.0), 2),
            "Watch": f"https://streamhub.example/watch/{vid}",
            "Still": f"https://streamhub.example/stills/{vid}.jpg",
            "Speech": rng.choice(["en", "fr", "de", "el", "es", "ja"]),
            "Cast": rng.sample([a for a in aids if a != uploader], rng.randint(0, 2)),
            "Spot": (
                {"Lat": lat, "Lon": lon, "CountryCode": country,
                 "Region": region, "Postal": postal}
                if rng.random() < 0.7 else None
            ),
        }

    notes: dict[str, dict] = {}
    nid = 0
    for vid, video in videos.items():
        for _ in range(rng.choice([0, 0, 1, 1, 2, 3])):
            nid += 1
            author = rng.choice(aids)
            notes[f"n{nid}"] = {
                "NoteId": f"n{nid}",
                "TargetKind": "video",
                "TargetId": vid,
                "AccountId": author,
                "Alias": accounts[author]["Handle"],
                "Body": sentence(rng, []),
                "Stamp": pick_ts_ms(rng),
                "UpVotes": rng.randint(0, 100),
            }
            video["CommentTotal"] += 1

    vids = list(videos)
    events: dict[str, dict] = {}
    n_events = rng.randint(18, 24)
    for i in range(1, n_events + 1):
        eid = f"a{i}"
        kind = rng.choice(_EVENT_KINDS)
        actor = rng.choice(aids)
        refs = rng.sample(vids, rng.randint(1, 2))
        first_video = videos[refs[0]]
        _, country, region, postal, _, lat, lon = pick_place(rng)
        events[eid] = {
            "EventId": eid,
            "Kind": kind,
            "When": pick_ts_ms(rng),
            "ActorId": actor,
            "Caption": f"{kind.lower()} {first_video['Title']}",
            "Detail": sentence(rng, pick_tags(rng, 1, 2)),
            "Tongue": rng.choice(["en", "fr", "de", "el", "es", "ja"]),
            "VideoRefs": refs,
            "AccountRefs": rng.sample(aids, rng.randint(0, 2)),
            "Where": (
                {"Lat": lat, "Lon": lon, "CountryCode": country,
                 "Region": region, "Postal": postal}
                if rng.random() < 0.4 else None
            ),
        }
        for _ in range(rng.choice([0, 0, 1, 2])):
            nid += 1
            author = rng.choice(aids)
            notes[f"n{nid}"] = {
                "NoteId": f"n{nid}",
                "TargetKind": "event",
                "TargetId": eid,
                "AccountId": author,
                "Alias": accounts[author]["Handle"],
                "Body": sentence(rng, []),
                "Stamp": pick_ts_ms(rng),
                "UpVotes": rng.randint(0, 100),
            }

    channels: dict[str, dict] = {}
    for c in range(1, rng.randint(8, 11)):
        cid = f"c{c}"
        channels[cid] = {
            "ChannelId": cid,
            "Name": sentence(rng, [], 3),
            "VideoIds": rng.sample(vids, rng.randint(2, 6)),
        }

    return {
        "accounts": accounts,
        "videos": videos,
        "notes": notes,
        "events": events,
        "channels": channels,
        "subs": subs,
        "counters": {"video": n_videos, "note": nid},
    }


class StreamhubApp(MockNetworkApp):
    name = "streamhub"

    def __init__(self, seed: int = DEFAULT_SEED):
        super().__init__(seed)
        self.reset()

    def reset(self) -> None:
        data = generate(self.seed)
        self.accounts = data["accounts"]
        self.videos = data["videos"]
        self.notes = data["notes"]
        self.events = data["events"]
        self.channels = data["channels"]
        self.subs = data["subs"]
        self.counters = data["counters"]

    def subject_exists(self, subject: str) -> bool:
        return subject in self.accounts

    def error_body(self, status: int, message: str) -> dict:
        return {"Fault": {"Status": status, "Reason": message}}

    # -- native routes -------------------------------------------------------

    def handle(self, method, parts, params, bearer, body):
        if method != "GET":
            raise HttpError(404, f"no such route: {method} /{'/'.join(parts)}")
        match parts:
            case ["accounts", "search"]:
                return 200, {"accounts": self._search_accounts(params.get("name", ""))}
            case ["accounts", "by_handle", handle]:
                for account in self.accounts.values():
                    if account["Handle"] == handle:
                        return 200, account
                raise HttpError(404, f"no account with handle {handle!r}")
            case ["accounts", aid]:
                return 200, self._account(aid)
            case ["accounts", aid, "subscriptions"]:
                self._account(aid)
                return 200, {"accounts": [self._account(s) for s in self.subs[aid]["public"]]}
            case ["accounts", aid, "subscriptions", "all"]:
                self._account(aid)
                self.require_own_data(bearer, aid)
                edges = self.subs[aid]
                return 200, {"accounts": [self._account(s) for s in edges["public"] + edges["private"]]}
            case ["accounts", aid, "videos"]:
                self._account(aid)
                mine = [v for v in self.videos.values() if v["Uploader"]["AccountId"] == aid]
                return 200, {"videos": mine}
            case ["accounts", aid, "events"]:
                self._account(aid)
                mine = [self._expand_event(e) for e in self.events.values() if e["ActorId"] == aid]
                return 200, {"events": mine}
            case ["videos", "search"]:
                return 200, {"videos": self._search_videos(params)}
            case ["videos", vid]:
                return 200, self._video(vid)
            case ["videos", vid, "alike"]:
                return 200, {"videos": self._alike(vid)}
            case ["videos", vid, "people"]:
                video = self._video(vid)
                people = [video["Uploader"]]
                seen = {video["Uploader"]["AccountId"]}
                for note in self.notes.values():
                    if note["TargetKind"] == "video" and note["TargetId"] == vid:
                        if note["AccountId"] not in seen:
                            seen.add(note["AccountId"])
                            people.append(self._account(note["AccountId"]))
                return 200, {"accounts": people}
            case ["videos", vid, "notes"]:
                self._video(vid)
                mine = [n for n in self.notes.values()
                        if n["TargetKind"] == "video" and n["TargetId"] == vid]
                return 200, {"notes": mine}
            case ["notes", nid]:
                note = self.notes.get(nid)
                if note is None:
                    raise HttpError(404, f"no note {nid!r}")
                return 200, note
            case ["channels", cid, "videos"]:
                channel = self.channels.get(cid)
                if channel is None:
                    raise HttpError(404, f"no channel {cid!r}")
                return 200, {"videos": [self.videos[v] for v in channel["VideoIds"] if v in self.videos]}
            case ["events", "search"]:
                return 200, {"events": self._search_events(params)}
            case ["events", eid, "people"]:
                event = self._event(eid)
                people = [self._account(event["ActorId"])]
                for ref in event["AccountRefs"]:
                    if ref != event["ActorId"]:
                        people.append(self._account(ref))
                return 200, {"accounts": people}
            case ["events", eid]:
                return 200, self._expand_event(self._event(eid))
            case ["events", eid, "notes"]:
                self._event(eid)
                mine = [n for n in self.notes.values()
                        if n["TargetKind"] == "event" and n["TargetId"] == eid]
                return 200, {"notes": mine}
        raise HttpError(404, f"no such route: GET /{'/'.join(parts)}")

    def _account(self, aid: str) -> dict:
        account = self.accounts.get(aid)
        if account is None:
            raise HttpError(404, f"no account {aid!r}")
        return account

    def _video(self, vid: str) -> dict:
        video = self.videos.get(vid)
        if video is None:
            raise HttpError(404, f"no video {vid!r}")
        return video

    def _event(self, eid: str) -> dict:
        event = self.events.get(eid)
        if event is None:
            raise HttpError(404, f"no event {eid!r}")
        return event

    def _expand_event(self, event: dict) -> dict:
        expanded = dict(event)
        expanded["Videos"] = [self.videos[v] for v in event["VideoRefs"] if v in self.videos]
        expanded["Accounts"] = [self.accounts[a] for a in event["AccountRefs"] if a in self.accounts]
        return expanded

    def _search_accounts(self, name: str) -> list[dict]:
        needles = [k.casefold() for k in name.split(",") if k]
        if not needles:
            return []
        out = []
        for account in self.accounts.values():
            hay = f"{account['Handle']} {account['DisplayName']}".casefold()
            if any(n in hay for n in needles):
                out.append(account)
        return out

    def _search_videos(self, params) -> list[dict]:
        needles = [k.casefold() for k in params.get("terms", "").split(",") if k]
        after = _int_param(params, "after")
        before = _int_param(params, "before")
        near = None
        if "lat" in params or "lon" in params or "km" in params:
            near = (_float_param(params, "lat"), _float_param(params, "lon"),
                    _float_param(params, "km"))
            if any(v is None for v in near):
                raise HttpError(400, "lat, lon and km must be given together")
        out = []
        for video in self.videos.values():
            if needles:
                hay = " ".join([video["Title"], video["Summary"],
                                " ".join(video["Keywords"])]).casefold()
                if not any(n in hay for n in needles):
                    continue
            if after is not None and video["PostedTime"] < after:
                continue
            if before is not None and video["PostedTime"] > before:
                continue
            if near is not None:
                spot = video.get("Spot")
                if spot is None:
                    continue
                if haversine_km(near[0], near[1], spot["Lat"], spot["Lon"]) > near[2]:
                    continue
            if not _spot_matches(video.get("Spot"), params):
                continue
            if "speech" in params and video["Speech"] != params["speech"]:
                continue
            if "rights" in params:
                rights = video.get("Rights")
                if rights is None or rights["Code"] != params["rights"]:
                    continue
            out.append(video)
        return out

    def _search_events(self, params) -> list[dict]:
        needles = [k.casefold() for k in params.get("terms", "").split(",") if k]
        tongue = params.get("tongue")
        out = []
        for event in self.events.values():
            if needles:
                hay = f"{event['Caption']} {event['Detail']}".casefold()
                if not any(n in hay for n in needles):
                    continue
            if tongue is not None and event["Tongue"] != tongue:
                continue
            out.append(self._expand_event(event))
        return out

    def _alike(self, vid: str) -> list[dict]:
        seed_keywords = set(self._video(vid)["Keywords"])
        scored = []
        for video in self.videos.values():
            if video["VideoId"] == vid:
                continue
            shared = len(seed_keywords & set(video["Keywords"]))
            if shared:
                scored.append((shared, video))
        scored.sort(key=lambda pair: (-pair[0], pair[1]["VideoId"]))
        return [video for _, video in scored]

    # -- harness mutations ---------------------------------------------------

    def mutate(self, op: dict) -> dict:
        kind = op.get("op")
        if kind == "add_media":
            owner = op.get("owner", "")
            if owner not in self.accounts:
                raise HttpError(404, f"no account {owner!r}")
            self.counters["video"] += 1
            vid = f"v{self.counters['video']}"
            title = str(op.get("text", "")) or "mutation video"
            record = {
                "VideoId": vid,
                "Title": title,
                "Summary": title,
                "PostedTime": now_ms(),
                "LengthSeconds": 60,
                "Uploader": dict(self.accounts[owner]),
                "Keywords": [],
                "Rights": None,
                "PlayCount": 0,
                "UpVotes": 0,
                "DownVotes": 0,
                "CommentTotal": 0,
                "ShareTotal": 0,
                "SavedTotal": 0,
                "SizeBytes": 1_000_000,
                "Score": 0.0,
                "Watch": f"https://streamhub.example/watch/{vid}",
                "Still": f"https://streamhub.example/stills/{vid}.jpg",
                "Speech": "en",
                "Cast": [],
                "Spot": None,
            }
            self.videos = {**self.videos, vid: record}
            return {"id": vid}
        if kind == "delete_media":
            target = op.get("id", "")
            if target not in self.videos:
                raise HttpError(404, f"no video {target!r}")
            self.videos = {k: v for k, v in self.videos.items() if k != target}
            return {"deleted": target}
        raise HttpError(400, f"unknown mutation op {kind!r}")


def _spot_matches(spot: dict | None, params: dict) -> bool:
    wanted = {k: params[k] for k in ("country", "region", "postal") if k in params}
    if not wanted:
        return True
    if spot is None:
        return False
    native_keys = {"country": "CountryCode", "region": "Region", "postal": "Postal"}
    return all(spot.get(native_keys[k]) == v for k, v in wanted.items())


def _int_param(params: dict, name: str) -> int | None:
    raw = params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise HttpError(400, f"{name} must be an integer") from None


def _float_param(params: dict, name: str) -> float | None:
    raw = params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise HttpError(400, f"{name} must be a number") from None
