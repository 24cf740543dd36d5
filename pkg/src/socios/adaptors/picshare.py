"""Adaptor for the picshare mock network (camelCase, ISO timestamps).

picshare has galleries (pages) but no activities. Network-specific
semantics: findPersonsByMediaItem returns the owner plus every tagged
person; item detail responses embed their comments, so fetched media
arrive with nested Comment objects.
"""
from __future__ import annotations

from ..errors import UnsupportedOperationError
from ..isotime import iso_to_date, iso_to_ms, ms_to_iso
from ..model.types import (
    Address,
    Comment,
    License,
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
from .mapping import FieldMapEntry

NETWORK = "picshare"

CAPABILITY = capability(
    m.ALL_METHODS - m.ACTIVITY_METHODS,
    rate_limit=RateLimit(max_calls=1000, per_window_seconds=1.0),
)


def _address(spot: dict | None) -> Address | None:
    if not spot:
        return None
    return Address(
        country=spot.get("countryCode"),
        latitude=spot.get("latitude"),
        longitude=spot.get("longitude"),
        postalCode=spot.get("zip"),
        region=spot.get("area"),
        streetAddress=spot.get("street"),
    )


def _license(lic: dict | None) -> License | None:
    if not lic:
        return None
    return License(licenseType=lic.get("kind"), name=lic.get("title"), url=lic.get("link"))


def person_from_native(rec: dict) -> Person:
    name = Name(
        firstName=rec.get("firstName"),
        lastName=rec.get("lastName"),
        fullName=rec.get("fullName"),
    )
    home = _address(rec.get("homeBase"))
    return Person(
        id=ObjectId(rec["memberId"], NETWORK),
        sn=NETWORK,
        aboutMe=rec.get("bio"),
        addresses=(home,) if home else (),
        birthday=iso_to_date(rec["birthDate"]) if rec.get("birthDate") else None,
        username=rec.get("nick"),
        email=rec.get("mail"),
        gender=rec.get("genderIdentity"),
        name=name if name != Name() else None,
        photos=tuple(rec.get("shots") or ()),
        profileUrl=rec.get("pageUrl"),
        memberSince=iso_to_ms(rec["joinedOn"]) if rec.get("joinedOn") else None,
        thumbnailUrl=rec.get("avatar"),
        numFriends=rec.get("contactCount"),
    )


def media_from_native(rec: dict) -> MediaItem:
    return MediaItem(
        id=ObjectId(rec["itemId"], NETWORK),
        sn=NETWORK,
        type=MediaType.IMAGE if rec.get("kind") == "photo" else MediaType.TEXT,
        created=iso_to_ms(rec["takenAt"]) if rec.get("takenAt") else None,
        title=rec.get("caption"),
        thumbnailUrl=rec.get("thumb"),
        description=rec.get("note"),
        location=_address(rec.get("spot")),
        language=rec.get("lang"),
        license=_license(rec.get("license")),
        fileSize=rec.get("bytes"),
        rating=rec.get("stars"),
        numRatings=rec.get("rateCount"),
        numPositiveVotes=rec.get("likes"),
        numNegativeVotes=rec.get("dislikes"),
        numComments=rec.get("commentCount"),
        numViews=rec.get("viewCount"),
        numFavorites=rec.get("favCount"),
        tags=tuple(rec.get("labels") or ()),
        taggedPeople=tuple(ObjectId(p, NETWORK) for p in rec.get("peopleTagged") or ()),
        url=rec.get("image"),
        userId=ObjectId(rec["ownerId"], NETWORK) if rec.get("ownerId") else None,
        comments=tuple(comment_from_native(c) for c in rec.get("comments") or ()),
    )


def comment_from_native(rec: dict) -> Comment:
    return Comment(
        id=ObjectId(rec["commentId"], NETWORK),
        sn=NETWORK,
        created=iso_to_ms(rec["writtenAt"]) if rec.get("writtenAt") else None,
        description=rec.get("body"),
        userId=ObjectId(rec["memberId"], NETWORK) if rec.get("memberId") else None,
        username=rec.get("nick"),
        numPositiveVotes=rec.get("likes"),
    )


class PicshareAdaptor(HttpSnsAdaptor):
    CAPABILITY = CAPABILITY

    def _fetch_person(self, person_id):
        return person_from_native(self._client.get(f"/members/{person_id.id}"))

    def _fetch_connected(self, person_id):
        data = self._client.get(f"/members/{person_id.id}/contacts")
        return [person_from_native(u) for u in data["members"]]

    def _fetch_connected_private(self, person_id, token):
        data = self._client.get(f"/members/{person_id.id}/contacts/all", bearer=token.token)
        return [person_from_native(u) for u in data["members"]]

    def _search_persons(self, keywords):
        data = self._client.get("/members/search", params={"who": ",".join(keywords)})
        return [person_from_native(u) for u in data["members"]]

    def _person_by_username(self, username):
        return person_from_native(self._client.get(f"/members/by_nick/{username}"))

    def _persons_for_media_item(self, media_item_id):
        data = self._client.get(f"/items/{media_item_id.id}/people")
        return [person_from_native(u) for u in data["members"]]

    def _persons_for_activity(self, activity_id):
        raise UnsupportedOperationError("picshare has no activities")

    def _fetch_media_item(self, media_item_id):
        return media_from_native(self._client.get(f"/items/{media_item_id.id}"))

    def _media_for_user(self, person_id):
        data = self._client.get(f"/members/{person_id.id}/items")
        return [media_from_native(i) for i in data["items"]]

    def _media_for_username(self, username):
        member = self._client.get(f"/members/by_nick/{username}")
        data = self._client.get(f"/members/{member['memberId']}/items")
        return [media_from_native(i) for i in data["items"]]

    def _media_for_page(self, page_id):
        data = self._client.get(f"/galleries/{page_id.id}/items")
        return [media_from_native(i) for i in data["items"]]

    def _search_media(self, media_filter: MediaItemFilter):
        params: dict[str, str] = {"match": ",".join(media_filter.keywords)}
        created = media_filter.created
        if created is not None and created.from_ is not None:
            params["takenAfter"] = ms_to_iso(created.from_)
        if created is not None and created.to is not None:
            params["takenBefore"] = ms_to_iso(created.to)
        location = media_filter.location
        if location is not None:
            if location.areaFilter is not None:
                area = location.areaFilter
                params["nearLat"] = repr(area.latitude)
                params["nearLon"] = repr(area.longitude)
                params["withinKm"] = repr(area.radius)
            if location.addressFilter is not None:
                addr = location.addressFilter
                if addr.country is not None:
                    params["country"] = addr.country
                if addr.region is not None:
                    params["area"] = addr.region
                if addr.postalCode is not None:
                    params["zip"] = addr.postalCode
        if media_filter.language is not None:
            params["lang"] = media_filter.language
        if media_filter.licenseType is not None:
            params["license"] = media_filter.licenseType
        data = self._client.get("/items/search", params=params)
        return [media_from_native(i) for i in data["items"]]

    def _relevant_media(self, media_item_id):
        data = self._client.get(f"/items/{media_item_id.id}/similar")
        return [media_from_native(i) for i in data["items"]]

    def _fetch_comment(self, comment_id):
        return comment_from_native(self._client.get(f"/comments/{comment_id.id}"))

    def _comments_for_media_item(self, media_item_id):
        data = self._client.get(f"/items/{media_item_id.id}/comments")
        return [comment_from_native(c) for c in data["comments"]]

    def _create_post(self, person_id, post_text, token):
        rec = self._client.post("/items", payload={"note": post_text}, bearer=token.token)
        return ObjectId(rec["itemId"], NETWORK)


def _kind_to_type(kind):
    return MediaType.IMAGE if kind == "photo" else MediaType.TEXT


PERSON_MAP = (
    FieldMapEntry("memberId", "id.id"),
    FieldMapEntry("nick", "username"),
    FieldMapEntry("firstName", "name.firstName"),
    FieldMapEntry("lastName", "name.lastName"),
    FieldMapEntry("fullName", "name.fullName"),
    FieldMapEntry("bio", "aboutMe"),
    FieldMapEntry("joinedOn", "memberSince", iso_to_ms),
    FieldMapEntry("birthDate", "birthday", iso_to_date),
    FieldMapEntry("genderIdentity", "gender"),
    FieldMapEntry("mail", "email"),
    FieldMapEntry("contactCount", "numFriends"),
    FieldMapEntry("avatar", "thumbnailUrl"),
    FieldMapEntry("pageUrl", "profileUrl"),
    FieldMapEntry("shots", "photos"),
    FieldMapEntry("homeBase.countryCode", "addresses[0].country"),
    FieldMapEntry("homeBase.area", "addresses[0].region"),
    FieldMapEntry("homeBase.zip", "addresses[0].postalCode"),
    FieldMapEntry("homeBase.street", "addresses[0].streetAddress"),
    FieldMapEntry("homeBase.latitude", "addresses[0].latitude"),
    FieldMapEntry("homeBase.longitude", "addresses[0].longitude"),
)

MEDIA_MAP = (
    FieldMapEntry("itemId", "id.id"),
    FieldMapEntry("ownerId", "userId.id"),
    FieldMapEntry("kind", "type", _kind_to_type),
    FieldMapEntry("caption", "title"),
    FieldMapEntry("note", "description"),
    FieldMapEntry("takenAt", "created", iso_to_ms),
    FieldMapEntry("labels", "tags"),
    FieldMapEntry("peopleTagged[*]", "taggedPeople[*].id"),
    FieldMapEntry("likes", "numPositiveVotes"),
    FieldMapEntry("dislikes", "numNegativeVotes"),
    FieldMapEntry("commentCount", "numComments"),
    FieldMapEntry("viewCount", "numViews"),
    FieldMapEntry("favCount", "numFavorites"),
    FieldMapEntry("rateCount", "numRatings"),
    FieldMapEntry("stars", "rating"),
    FieldMapEntry("lang", "language"),
    FieldMapEntry("bytes", "fileSize"),
    FieldMapEntry("image", "url"),
    FieldMapEntry("thumb", "thumbnailUrl"),
    FieldMapEntry("spot.latitude", "location.latitude"),
    FieldMapEntry("spot.longitude", "location.longitude"),
    FieldMapEntry("spot.countryCode", "location.country"),
    FieldMapEntry("spot.area", "location.region"),
    FieldMapEntry("spot.zip", "location.postalCode"),
    FieldMapEntry("license.kind", "license.licenseType"),
    FieldMapEntry("license.title", "license.name"),
    FieldMapEntry("license.link", "license.url"),
)

COMMENT_MAP = (
    FieldMapEntry("commentId", "id.id"),
    FieldMapEntry("memberId", "userId.id"),
    FieldMapEntry("nick", "username"),
    FieldMapEntry("body", "description"),
    FieldMapEntry("writtenAt", "created", iso_to_ms),
    FieldMapEntry("likes", "numPositiveVotes"),
)
