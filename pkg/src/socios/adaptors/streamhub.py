"""Adaptor for the streamhub mock network (PascalCase, epoch milliseconds).

streamhub is the only mock with native activities (events) and nests the
uploader account inside every video. Channels act as pages. It offers no
text posting, so postMessage is not declared. Network-specific semantics:
findPersonsByMediaItem returns uploader plus comment authors;
findPersonsByActivity returns the actor plus referenced accounts.
"""
from __future__ import annotations

from ..model.types import (
    Activity,
    ActivityFilter,
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

NETWORK = "streamhub"

CAPABILITY = capability(
    m.ALL_METHODS - {m.POST_MESSAGE},
    rate_limit=RateLimit(max_calls=1000, per_window_seconds=1.0),
)


def _address(spot: dict | None) -> Address | None:
    if not spot:
        return None
    return Address(
        country=spot.get("CountryCode"),
        latitude=spot.get("Lat"),
        longitude=spot.get("Lon"),
        postalCode=spot.get("Postal"),
        region=spot.get("Region"),
        streetAddress=spot.get("Street"),
    )


def person_from_native(rec: dict) -> Person:
    display = rec.get("DisplayName")
    return Person(
        id=ObjectId(rec["AccountId"], NETWORK),
        sn=NETWORK,
        aboutMe=rec.get("About"),
        currentLocation=_address(rec.get("Base")),
        username=rec.get("Handle"),
        name=Name(fullName=display) if display else None,
        profileUrl=rec.get("Portal"),
        memberSince=rec.get("SignupTime"),
        thumbnailUrl=rec.get("Avatar"),
        utcOffset=rec.get("Zone"),
        inDegree=rec.get("SubscriberTotal"),
        outDegree=rec.get("SubscribedTotal"),
    )


def media_from_native(rec: dict) -> MediaItem:
    rights = rec.get("Rights")
    uploader = rec.get("Uploader") or {}
    return MediaItem(
        id=ObjectId(rec["VideoId"], NETWORK),
        sn=NETWORK,
        type=MediaType.VIDEO,
        created=rec.get("PostedTime"),
        title=rec.get("Title"),
        thumbnailUrl=rec.get("Still"),
        description=rec.get("Summary"),
        duration=rec.get("LengthSeconds"),
        location=_address(rec.get("Spot")),
        language=rec.get("Speech"),
        license=License(licenseType=rights.get("Code"), name=rights.get("Label"),
                        url=rights.get("Terms")) if rights else None,
        fileSize=rec.get("SizeBytes"),
        rating=rec.get("Score"),
        numPositiveVotes=rec.get("UpVotes"),
        numNegativeVotes=rec.get("DownVotes"),
        numComments=rec.get("CommentTotal"),
        numViews=rec.get("PlayCount"),
        numResharings=rec.get("ShareTotal"),
        numFavorites=rec.get("SavedTotal"),
        tags=tuple(rec.get("Keywords") or ()),
        taggedPeople=tuple(ObjectId(a, NETWORK) for a in rec.get("Cast") or ()),
        url=rec.get("Watch"),
        userId=ObjectId(uploader["AccountId"], NETWORK) if uploader.get("AccountId") else None,
    )


def comment_from_native(rec: dict) -> Comment:
    return Comment(
        id=ObjectId(rec["NoteId"], NETWORK),
        sn=NETWORK,
        created=rec.get("Stamp"),
        description=rec.get("Body"),
        userId=ObjectId(rec["AccountId"], NETWORK) if rec.get("AccountId") else None,
        username=rec.get("Alias"),
        numPositiveVotes=rec.get("UpVotes"),
    )


def activity_from_native(rec: dict) -> Activity:
    """Expects the expanded form, with Videos and Accounts inlined."""
    return Activity(
        id=ObjectId(rec["EventId"], NETWORK),
        sn=NETWORK,
        created=rec.get("When"),
        title=rec.get("Caption"),
        description=rec.get("Detail"),
        location=_address(rec.get("Where")),
        actorId=ObjectId(rec["ActorId"], NETWORK) if rec.get("ActorId") else None,
        objectType=rec.get("Kind"),
        mediaItems=tuple(media_from_native(v) for v in rec.get("Videos") or ()),
        persons=tuple(person_from_native(a) for a in rec.get("Accounts") or ()),
    )


class StreamhubAdaptor(HttpSnsAdaptor):
    CAPABILITY = CAPABILITY

    def _fetch_person(self, person_id):
        return person_from_native(self._client.get(f"/accounts/{person_id.id}"))

    def _fetch_connected(self, person_id):
        data = self._client.get(f"/accounts/{person_id.id}/subscriptions")
        return [person_from_native(a) for a in data["accounts"]]

    def _fetch_connected_private(self, person_id, token):
        data = self._client.get(f"/accounts/{person_id.id}/subscriptions/all", bearer=token.token)
        return [person_from_native(a) for a in data["accounts"]]

    def _search_persons(self, keywords):
        data = self._client.get("/accounts/search", params={"name": ",".join(keywords)})
        return [person_from_native(a) for a in data["accounts"]]

    def _person_by_username(self, username):
        return person_from_native(self._client.get(f"/accounts/by_handle/{username}"))

    def _persons_for_media_item(self, media_item_id):
        data = self._client.get(f"/videos/{media_item_id.id}/people")
        return [person_from_native(a) for a in data["accounts"]]

    def _persons_for_activity(self, activity_id):
        data = self._client.get(f"/events/{activity_id.id}/people")
        return [person_from_native(a) for a in data["accounts"]]

    def _fetch_media_item(self, media_item_id):
        return media_from_native(self._client.get(f"/videos/{media_item_id.id}"))

    def _media_for_user(self, person_id):
        data = self._client.get(f"/accounts/{person_id.id}/videos")
        return [media_from_native(v) for v in data["videos"]]

    def _media_for_username(self, username):
        account = self._client.get(f"/accounts/by_handle/{username}")
        data = self._client.get(f"/accounts/{account['AccountId']}/videos")
        return [media_from_native(v) for v in data["videos"]]

    def _media_for_page(self, page_id):
        data = self._client.get(f"/channels/{page_id.id}/videos")
        return [media_from_native(v) for v in data["videos"]]

    def _search_media(self, media_filter: MediaItemFilter):
        params: dict[str, str] = {"terms": ",".join(media_filter.keywords)}
        created = media_filter.created
        if created is not None and created.from_ is not None:
            params["after"] = str(created.from_)
        if created is not None and created.to is not None:
            params["before"] = str(created.to)
        location = media_filter.location
        if location is not None:
            if location.areaFilter is not None:
                area = location.areaFilter
                params["lat"] = repr(area.latitude)
                params["lon"] = repr(area.longitude)
                params["km"] = repr(area.radius)
            if location.addressFilter is not None:
                addr = location.addressFilter
                if addr.country is not None:
                    params["country"] = addr.country
                if addr.region is not None:
                    params["region"] = addr.region
                if addr.postalCode is not None:
                    params["postal"] = addr.postalCode
        if media_filter.language is not None:
            params["speech"] = media_filter.language
        if media_filter.licenseType is not None:
            params["rights"] = media_filter.licenseType
        data = self._client.get("/videos/search", params=params)
        return [media_from_native(v) for v in data["videos"]]

    def _relevant_media(self, media_item_id):
        data = self._client.get(f"/videos/{media_item_id.id}/alike")
        return [media_from_native(v) for v in data["videos"]]

    def _fetch_activity(self, activity_id):
        return activity_from_native(self._client.get(f"/events/{activity_id.id}"))

    def _activities_for_user(self, person_id):
        data = self._client.get(f"/accounts/{person_id.id}/events")
        return [activity_from_native(e) for e in data["events"]]

    def _search_activities(self, activity_filter: ActivityFilter):
        params = {"terms": ",".join(activity_filter.keywords)}
        if activity_filter.language is not None:
            params["tongue"] = activity_filter.language
        data = self._client.get("/events/search", params=params)
        return [activity_from_native(e) for e in data["events"]]

    def _fetch_comment(self, comment_id):
        return comment_from_native(self._client.get(f"/notes/{comment_id.id}"))

    def _comments_for_media_item(self, media_item_id):
        data = self._client.get(f"/videos/{media_item_id.id}/notes")
        return [comment_from_native(n) for n in data["notes"]]

    def _comments_for_activity(self, activity_id):
        data = self._client.get(f"/events/{activity_id.id}/notes")
        return [comment_from_native(n) for n in data["notes"]]


PERSON_MAP = (
    FieldMapEntry("AccountId", "id.id"),
    FieldMapEntry("Handle", "username"),
    FieldMapEntry("DisplayName", "name.fullName"),
    FieldMapEntry("About", "aboutMe"),
    FieldMapEntry("SignupTime", "memberSince"),
    FieldMapEntry("SubscriberTotal", "inDegree"),
    FieldMapEntry("SubscribedTotal", "outDegree"),
    FieldMapEntry("Avatar", "thumbnailUrl"),
    FieldMapEntry("Portal", "profileUrl"),
    FieldMapEntry("Zone", "utcOffset"),
    FieldMapEntry("Base.CountryCode", "currentLocation.country"),
    FieldMapEntry("Base.Region", "currentLocation.region"),
    FieldMapEntry("Base.Postal", "currentLocation.postalCode"),
    FieldMapEntry("Base.Street", "currentLocation.streetAddress"),
    FieldMapEntry("Base.Lat", "currentLocation.latitude"),
    FieldMapEntry("Base.Lon", "currentLocation.longitude"),
)

MEDIA_MAP = (
    FieldMapEntry("VideoId", "id.id"),
    FieldMapEntry("Uploader.AccountId", "userId.id"),
    FieldMapEntry("Title", "title"),
    FieldMapEntry("Summary", "description"),
    FieldMapEntry("PostedTime", "created"),
    FieldMapEntry("LengthSeconds", "duration"),
    FieldMapEntry("Keywords", "tags"),
    FieldMapEntry("Cast[*]", "taggedPeople[*].id"),
    FieldMapEntry("Rights.Code", "license.licenseType"),
    FieldMapEntry("Rights.Label", "license.name"),
    FieldMapEntry("Rights.Terms", "license.url"),
    FieldMapEntry("PlayCount", "numViews"),
    FieldMapEntry("UpVotes", "numPositiveVotes"),
    FieldMapEntry("DownVotes", "numNegativeVotes"),
    FieldMapEntry("CommentTotal", "numComments"),
    FieldMapEntry("ShareTotal", "numResharings"),
    FieldMapEntry("SavedTotal", "numFavorites"),
    FieldMapEntry("SizeBytes", "fileSize"),
    FieldMapEntry("Score", "rating"),
    FieldMapEntry("Watch", "url"),
    FieldMapEntry("Still", "thumbnailUrl"),
    FieldMapEntry("Speech", "language"),
    FieldMapEntry("Spot.Lat", "location.latitude"),
    FieldMapEntry("Spot.Lon", "location.longitude"),
    FieldMapEntry("Spot.CountryCode", "location.country"),
    FieldMapEntry("Spot.Region", "location.region"),
    FieldMapEntry("Spot.Postal", "location.postalCode"),
    FieldMapEntry("VideoId", "type", lambda _: MediaType.VIDEO, note="videos are always VIDEO"),
)

COMMENT_MAP = (
    FieldMapEntry("NoteId", "id.id"),
    FieldMapEntry("AccountId", "userId.id"),
    FieldMapEntry("Alias", "username"),
    FieldMapEntry("Body", "description"),
    FieldMapEntry("Stamp", "created"),
    FieldMapEntry("UpVotes", "numPositiveVotes"),
)

ACTIVITY_MAP = (
    FieldMapEntry("EventId", "id.id"),
    FieldMapEntry("Kind", "objectType"),
    FieldMapEntry("When", "created"),
    FieldMapEntry("ActorId", "actorId.id"),
    FieldMapEntry("Caption", "title"),
    FieldMapEntry("Detail", "description"),
    FieldMapEntry("Where.Lat", "location.latitude"),
    FieldMapEntry("Where.Lon", "location.longitude"),
    FieldMapEntry("Where.CountryCode", "location.country"),
    FieldMapEntry("Where.Region", "location.region"),
    FieldMapEntry("Where.Postal", "location.postalCode"),
    FieldMapEntry("VideoRefs[*]", "mediaItems[*].id.id",
                  note="expanded to full items via the Videos inline list"),
    FieldMapEntry("AccountRefs[*]", "persons[*].id.id",
                  note="expanded to full persons via the Accounts inline list"),
    # The native Tongue field has no canonical counterpart; activity
    # language filtering happens backend-side against it.
)
