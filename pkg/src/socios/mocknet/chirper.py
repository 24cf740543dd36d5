"""chirper: a microblog mock network.

Native schema: snake_case field names, epoch-second integer timestamps.
Text posts with hashtags and an asymmetric follow graph; no activities,
no pages. findPersonsByMediaItem semantics here: the post author only.
"""
from __future__ import annotations

from ..isotime import now_ms
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

MAX_POST_CHARS = 10_000

_STATUS_CODES = {400: "bad_request", 401: "unauthorized", 403: "forbidden",
                 404: "not_found", 429: "too_many", 500: "server_error"}


def generate(seed: int) -> dict:
    rng = rng_for("chirper", seed)
    users: dict[str, dict] = {}
    n_users = rng.randint(45, 52)
    for i in range(1, n_users + 1):
        uid = f"u{i}"
        first, last = full_name(rng)
        handle = f"{first}_{last[:4]}{rng.randint(1, 99)}"
        _, country, region, postal, street, lat, lon = pick_place(rng)
        users[uid] = {
            "user_id": uid,
            "handle": handle,
            "display_name": f"{first.capitalize()} {last.capitalize()}",
            "bio": sentence(rng, []),
            "joined_at": pick_ts_ms(rng) // 1000,
            "time_zone_minutes": rng.choice([-480, -300, 0, 60, 120, 330, 540]),
            "follower_count": 0,
            "following_count": 0,
            "avatar_url": f"https://chirper.example/avatars/{uid}.png",
            "profile_link": f"https://chirper.example/@{handle}",
            "email_address": f"{handle}@mail.example",
            "home_town": {
                "country_code": country,
                "city_region": region,
                "postal": postal,
                "street": street,
                "lat": lat,
                "lon": lon,
            },
        }

    uids = list(users)
    follows: dict[str, dict] = {}
    for uid in uids:
        others = [u for u in uids if u != uid]
        public = rng.sample(others, rng.randint(3, 8))
        rest = [u for u in others if u not in public]
        private = rng.sample(rest, rng.randint(0, 3))
        follows[uid] = {"public": public, "private": private}
    for uid in uids:
        users[uid]["following_count"] = len(follows[uid]["public"])
        users[uid]["follower_count"] = sum(
            1 for other in uids if uid in follows[other]["public"]
        )

    posts: dict[str, dict] = {}
    n_posts = rng.randint(190, 210)
    for i in range(1, n_posts + 1):
        pid = f"p{i}"
        author = rng.choice(uids)
        hashtags = pick_tags(rng)
        text = sentence(rng, hashtags) + " " + " ".join("#" + t for t in hashtags)
        posts[pid] = {
            "post_id": pid,
            "author_id": author,
            "text": text,
            "posted_at": pick_ts_ms(rng) // 1000,
            "like_count": rng.randint(0, 500),
            "repost_count": rng.randint(0, 60),
            "reply_count": 0,
            "view_count": rng.randint(10, 20_000),
            "hashtags": hashtags,
            "mentions": rng.sample([u for u in uids if u != author], rng.randint(0, 2)),
            "lang_code": rng.choice(["en", "fr", "de", "el", "es", "ja"]),
            "permalink": f"https://chirper.example/{author}/status/{pid}",
        }

    replies: dict[str, dict] = {}
    rid = 0
    for pid, post in posts.items():
        for _ in range(rng.choice([0, 0, 0, 1, 1, 2, 3])):
            rid += 1
            author = rng.choice(uids)
            replies[f"r{rid}"] = {
                "reply_id": f"r{rid}",
                "post_id": pid,
                "author_id": author,
                "author_handle": users[author]["handle"],
                "text": sentence(rng, []),
                "replied_at": pick_ts_ms(rng) // 1000,
                "like_count": rng.randint(0, 40),
            }
            post["reply_count"] += 1

    return {
        "users": users,
        "posts": posts,
        "replies": replies,
        "follows": follows,
        "counters": {"post": n_posts, "reply": rid},
    }


class ChirperApp(MockNetworkApp):
    name = "chirper"

    def __init__(self, seed: int = DEFAULT_SEED):
        super().__init__(seed)
        self.reset()

    def reset(self) -> None:
        data = generate(self.seed)
        self.users = data["users"]
        self.posts = data["posts"]
        self.replies = data["replies"]
        self.follows = data["follows"]
        self.counters = data["counters"]

    def subject_exists(self, subject: str) -> bool:
        return subject in self.users

    def error_body(self, status: int, message: str) -> dict:
        return {"error": {"code": _STATUS_CODES.get(status, "error"), "detail": message}}

    # -- native routes -------------------------------------------------------

    def handle(self, method, parts, params, bearer, body):
        if method == "GET":
            return self._handle_get(parts, params, bearer)
        if method == "POST" and parts == ["posts"]:
            return self._create_post(bearer, body or {})
        raise HttpError(404, f"no such route: {method} /{'/'.join(parts)}")

    def _handle_get(self, parts, params, bearer):
        match parts:
            case ["users", "search"]:
                return 200, {"users": self._search_users(params.get("q", ""))}
            case ["users", "by_handle", handle]:
                for user in self.users.values():
                    if user["handle"] == handle:
                        return 200, user
                raise HttpError(404, f"no user with handle {handle!r}")
            case ["users", uid]:
                return 200, self._user(uid)
            case ["users", uid, "following"]:
                self._user(uid)
                return 200, {"users": [self._user(f) for f in self.follows[uid]["public"]]}
            case ["users", uid, "following", "all"]:
                self._user(uid)
                self.require_own_data(bearer, uid)
                edges = self.follows[uid]
                return 200, {"users": [self._user(f) for f in edges["public"] + edges["private"]]}
            case ["users", uid, "posts"]:
                self._user(uid)
                items = [p for p in self.posts.values() if p["author_id"] == uid]
                return 200, {"posts": items}
            case ["posts", "search"]:
                return 200, {"posts": self._search_posts(params)}
            case ["posts", pid]:
                return 200, self._post(pid)
            case ["posts", pid, "related"]:
                return 200, {"posts": self._related(pid)}
            case ["posts", pid, "people"]:
                post = self._post(pid)
                return 200, {"users": [self._user(post["author_id"])]}
            case ["posts", pid, "replies"]:
                self._post(pid)
                items = [r for r in self.replies.values() if r["post_id"] == pid]
                return 200, {"replies": items}
            case ["replies", rid]:
                reply = self.replies.get(rid)
                if reply is None:
                    raise HttpError(404, f"no reply {rid!r}")
                return 200, reply
        raise HttpError(404, f"no such route: GET /{'/'.join(parts)}")

    def _user(self, uid: str) -> dict:
        user = self.users.get(uid)
        if user is None:
            raise HttpError(404, f"no user {uid!r}")
        return user

    def _post(self, pid: str) -> dict:
        post = self.posts.get(pid)
        if post is None:
            raise HttpError(404, f"no post {pid!r}")
        return post

    def _search_users(self, q: str) -> list[dict]:
        needles = [k.casefold() for k in q.split(",") if k]
        if not needles:
            return []
        out = []
        for user in self.users.values():
            hay = f"{user['handle']} {user['display_name']}".casefold()
            if any(n in hay for n in needles):
                out.append(user)
        return out

    def _search_posts(self, params) -> list[dict]:
        needles = [k.casefold() for k in params.get("q", "").split(",") if k]
        since = _int_param(params, "since")
        until = _int_param(params, "until")
        lang = params.get("lang")
        out = []
        for post in self.posts.values():
            if needles:
                hay = (post["text"] + " " + " ".join(post["hashtags"])).casefold()
                if not any(n in hay for n in needles):
                    continue
            if since is not None and post["posted_at"] < since:
                continue
            if until is not None and post["posted_at"] > until:
                continue
            if lang is not None and post["lang_code"] != lang:
                continue
            out.append(post)
        return out

    def _related(self, pid: str) -> list[dict]:
        seed_tags = set(self._post(pid)["hashtags"])
        scored = []
        for post in self.posts.values():
            if post["post_id"] == pid:
                continue
            shared = len(seed_tags & set(post["hashtags"]))
            if shared:
                scored.append((shared, post))
        scored.sort(key=lambda pair: (-pair[0], pair[1]["post_id"]))
        return [post for _, post in scored]

    def _create_post(self, bearer, body) -> tuple[int, dict]:
        subject = self.authenticated_subject(bearer)
        text = body.get("text")
        if not isinstance(text, str) or not text:
            raise HttpError(400, "text must be a nonempty string")
        if len(text) > MAX_POST_CHARS:
            raise HttpError(400, f"text exceeds {MAX_POST_CHARS} characters")
        with self._state_lock:
            return 201, self._insert_post(subject, text)

    def _insert_post(self, author: str, text: str) -> dict:
        self.counters["post"] += 1
        pid = f"p{self.counters['post']}"
        hashtags = [w[1:] for w in text.split() if w.startswith("#") and len(w) > 1]
        record = {
            "post_id": pid,
            "author_id": author,
            "text": text,
            "posted_at": now_ms() // 1000,
            "like_count": 0,
            "repost_count": 0,
            "reply_count": 0,
            "view_count": 0,
            "hashtags": hashtags,
            "mentions": [],
            "lang_code": "en",
            "permalink": f"https://chirper.example/{author}/status/{pid}",
        }
        self.posts = {**self.posts, pid: record}
        return record

    # -- harness mutations ---------------------------------------------------

    def mutate(self, op: dict) -> dict:
        kind = op.get("op")
        if kind == "add_media":
            owner = op.get("owner", "")
            if owner not in self.users:
                raise HttpError(404, f"no user {owner!r}")
            record = self._insert_post(owner, str(op.get("text", "")) or "mutation post")
            return {"id": record["post_id"]}
        if kind == "delete_media":
            target = op.get("id", "")
            if target not in self.posts:
                raise HttpError(404, f"no post {target!r}")
            self.posts = {k: v for k, v in self.posts.items() if k != target}
            return {"deleted": target}
        raise HttpError(400, f"unknown mutation op {kind!r}")


def _int_param(params: dict, name: str) -> int | None:
    raw = params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise HttpError(400, f"{name} must be an integer") from None
