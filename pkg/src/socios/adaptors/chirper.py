"""Adaptor for the chirper mock network (snake_case, epoch seconds).

chirper has no activities and no pages. Network-specific semantics:
findPersonsByMediaItem returns just the post author; media searches with a
location or license clause return nothing because chirper posts carry
neither field.
"""
from __future__ import annotations

from ..errors import UnsupportedOperationError
from ..model.types import (
    Address,
    Comment,
    MediaItem,
    MediaItemFilter,
    MediaType,
    Name,
    ObjectId,
    Person,
)
from . import methods as m
from .capability import RateLimit, capability
from .http import HttpSnsAdaptor
from .mapping import FieldMapEntry, seconds_to_ms

NETWORK = "chirper"

CAPABILITY = capability(
    m.ALL_METHODS - m.ACTIVITY_METHODS - {m.GET_MEDIA_ITEMS_FOR_PAGE},
    rate_limit=RateLimit(max_calls=1000, per_window_seconds=1.0),
)


def _address(home: dict | None) -> Address | None:
    if not home:
        return None
    return Address(
        country=home.get("country_code"),
        latitude=home.get("lat"),
        longitude=home.get("lon"),
        postalCode=home.get("postal"),
        region=home.get("city_region"),
        streetAddress=home.get("street"),
    )


def person_from_native(rec: dict) -> Person:
    display = rec.get("display_name")
    return Person(
        id=ObjectId(rec["user_id"], NETWORK),
        sn=NETWORK,
        aboutMe=rec.get("bio"),
        currentLocation=_address(rec.get("home_town")),
        username=rec.get("handle"),
        email=rec.get("email_address"),
        name=Name(fullName=display) if display else None,
        profileUrl=rec.get("profile_link"),
        memberSince=seconds_to_ms(rec.get("joined_at")),
        thumbnailUrl=rec.get("avatar_url"),
        utcOffset=rec.get("time_zone_minutes"),
        inDegree=rec.get("follower_count"),
        outDegree=rec.get("following_count"),
    )


def media_from_native(rec: dict) -> MediaItem:
    return MediaItem(
        id=ObjectId(rec["post_id"], NETWORK),
        sn=NETWORK,
        type=MediaType.TEXT,
        created=seconds_to_ms(rec.get("posted_at")),
        description=rec.get("text"),
        language=rec.get("lang_code"),
        url=rec.get("permalink"),
        numPositiveVotes=rec.get("like_count"),
        numResharings=rec.get("repost_count"),
        numComments=rec.get("reply_count"),
        numViews=rec.get("view_count"),
        tags=tuple(rec.get("hashtags") or ()),
        taggedPeople=tuple(ObjectId(u, NETWORK) for u in rec.get("mentions") or ()),
        userId=ObjectId(rec["author_id"], NETWORK) if rec.get("author_id") else None,
    )


def comment_from_native(rec: dict) -> Comment:
    return Comment(
        id=ObjectId(rec["reply_id"], NETWORK),
        sn=NETWORK,
        created=seconds_to_ms(rec.get("replied_at")),
        description=rec.get("text"),
        userId=ObjectId(rec["author_id"], NETWORK) if rec.get("author_id") else None,
        username=rec.get("author_handle"),
        numPositiveVotes=rec.get("like_count"),
    )


class ChirperAdaptor(HttpSnsAdaptor):
    CAPABILITY = CAPABILITY

    def _fetch_person(self, person_id):
        return person_from_native(self._client.get(f"/users/{person_id.id}"))

    def _fetch_connected(self, person_id):
        data = self._client.get(f"/users/{person_id.id}/following")
        return [person_from_native(u) for u in data["users"]]

    def _fetch_connected_private(self, person_id, token):
        data = self._client.get(f"/users/{person_id.id}/following/all", bearer=token.token)
        return [person_from_native(u) for u in data["users"]]

    def _search_persons(self, keywords):
        data = self._client.get("/users/search", params={"q": ",".join(keywords)})
        return [person_from_native(u) for u in data["users"]]

    def _person_by_username(self, username):
        return person_from_native(self._client.get(f"/users/by_handle/{username}"))

    def _persons_for_media_item(self, media_item_id):
        data = self._client.get(f"/posts/{media_item_id.id}/people")
        return [person_from_native(u) for u in data["users"]]

    def _persons_for_activity(self, activity_id):
        raise UnsupportedOperationError("chirper has no activities")

    def _fetch_media_item(self, media_item_id):
        return media_from_native(self._client.get(f"/posts/{media_item_id.id}"))

    def _media_for_user(self, person_id):
        data = self._client.get(f"/users/{person_id.id}/posts")
        return [media_from_native(p) for p in data["posts"]]

    def _media_for_username(self, username):
        user = self._client.get(f"/users/by_handle/{username}")
        data = self._client.get(f"/users/{user['user_id']}/posts")
        return [media_from_native(p) for p in data["posts"]]

    def _search_media(self, media_filter: MediaItemFilter):
        # Posts carry no location and no license: those clauses can never
        # be satisfied here, so skip the backend entirely.
        if media_filter.location is not None or media_filter.licenseType is not None:
            return []
        params = {"q": ",".join(media_filter.keywords)}
        created = media_filter.created
        if created is not None and created.from_ is not None:
            params["since"] = str(-(-created.from_ // 1000))  # ceil to whole seconds
        if created is not None and created.to is not None:
            params["until"] = str(created.to // 1000)
        if media_filter.language is not None:
            params["lang"] = media_filter.language
        data = self._client.get("/posts/search", params=params)
        return [media_from_native(p) for p in data["posts"]]

    def _relevant_media(self, media_item_id):
        data = self._client.get(f"/posts/{media_item_id.id}/related")
        return [media_from_native(p) for p in data["posts"]]

    def _fetch_comment(self, comment_id):
        return comment_from_native(self._client.get(f"/replies/{comment_id.id}"))

    def _comments_for_media_item(self, media_item_id):
        data = self._client.get(f"/posts/{media_item_id.id}/replies")
        return [comment_from_native(r) for r in data["replies"]]

    def _create_post(self, person_id, post_text, token):
        rec = self._client.post("/posts", payload={"text": post_text}, bearer=token.token)
        return ObjectId(rec["post_id"], NETWORK)


PERSON_MAP = (
    FieldMapEntry("user_id", "id.id"),
    FieldMapEntry("handle", "username"),
    FieldMapEntry("display_name", "name.fullName"),
    FieldMapEntry("bio", "aboutMe"),
    FieldMapEntry("joined_at", "memberSince", seconds_to_ms),
    FieldMapEntry("time_zone_minutes", "utcOffset"),
    FieldMapEntry("follower_count", "inDegree"),
    FieldMapEntry("following_count", "outDegree"),
    FieldMapEntry("avatar_url", "thumbnailUrl"),
    FieldMapEntry("profile_link", "profileUrl"),
    FieldMapEntry("email_address", "email"),
    FieldMapEntry("home_town.country_code", "currentLocation.country"),
    FieldMapEntry("home_town.city_region", "currentLocation.region"),
    FieldMapEntry("home_town.postal", "currentLocation.postalCode"),
    FieldMapEntry("home_town.street", "currentLocation.streetAddress"),
    FieldMapEntry("home_town.lat", "currentLocation.latitude"),
    FieldMapEntry("home_town.lon", "currentLocation.longitude"),
)

MEDIA_MAP = (
    FieldMapEntry("post_id", "id.id"),
    FieldMapEntry("author_id", "userId.id"),
    FieldMapEntry("text", "description"),
    FieldMapEntry("posted_at", "created", seconds_to_ms),
    FieldMapEntry("like_count", "numPositiveVotes"),
    FieldMapEntry("repost_count", "numResharings"),
    FieldMapEntry("reply_count", "numComments"),
    FieldMapEntry("view_count", "numViews"),
    FieldMapEntry("hashtags", "tags"),
    FieldMapEntry("mentions[*]", "taggedPeople[*].id"),
    FieldMapEntry("lang_code", "language"),
    FieldMapEntry("permalink", "url"),
    FieldMapEntry("post_id", "type", lambda _: MediaType.TEXT, note="posts are always TEXT"),
)

COMMENT_MAP = (
    FieldMapEntry("reply_id", "id.id"),
    FieldMapEntry("author_id", "userId.id"),
    FieldMapEntry("author_handle", "username"),
    FieldMapEntry("text", "description"),
    FieldMapEntry("replied_at", "created", seconds_to_ms),
    FieldMapEntry("like_count", "numPositiveVotes"),
)
