"""The contract every backend integration must satisfy.

`SnsAdaptor` exposes the single-network counterpart of each of the 16
aggregation methods. The base class owns the cross-cutting behavior —
capability gating (unsupported methods fail without touching the backend),
token checks for the two auth methods, and per-id error capture in batch
lookups — while subclasses implement the network-specific fetch/search
hooks. Instances are created per method invocation and hold no state
beyond their immutable config and the shared call budget.
"""
from __future__ import annotations

from typing import Callable, Iterable, Sequence, TypeVar

from ..envelope import ResultEnvelope, error_from_exception
from ..errors import (
    AuthInvalidError,
    AuthRequiredError,
    BackendTimeoutError,
    BackendUnavailableError,
    BadRequestError,
    SociosError,
    UnsupportedOperationError,
)
from ..model.types import (
    ActivityFilter,
    MediaItemFilter,
    ObjectId,
    Person,
)
from . import methods as m
from .auth import AuthToken
from .capability import AdaptorCapability
from .ratelimit import TokenBucket
from .registry import NetworkConfig

T = TypeVar("T")


class SnsAdaptor:
    """Single-network adaptor. Subclasses set CAPABILITY and the hooks."""

    CAPABILITY: AdaptorCapability

    def __init__(self, config: NetworkConfig, bucket: TokenBucket):
        self.network = config.name
        self._config = config
        self._bucket = bucket

    def capability(self) -> AdaptorCapability:
        return self.CAPABILITY

    # -- public surface -----------------------------------------------------

    def get_persons(self, person_ids: Sequence[ObjectId]) -> ResultEnvelope:
        self._require(m.GET_PERSONS)
        return self._batch(m.GET_PERSONS, person_ids, self._fetch_person)

    def connected_persons(self, person_id: ObjectId) -> ResultEnvelope:
        self._require(m.CONNECTED_PERSONS)
        return _env(self._fetch_connected(person_id))

    def my_connected_persons(self, person_id: ObjectId, token: AuthToken | None) -> ResultEnvelope:
        self._require(m.MY_CONNECTED_PERSONS)
        self._check_token(token, person_id)
        return _env(self._fetch_connected_private(person_id, token))

    def find_persons(
        self,
        person_filter=None,
        media_item_id: ObjectId | None = None,
        activity_id: ObjectId | None = None,
        username: str | None = None,
    ) -> ResultEnvelope:
        self._require(m.FIND_PERSONS)
        if person_filter is not None:
            found: Iterable[Person] = self._search_persons(tuple(person_filter.keywords))
        elif media_item_id is not None:
            found = self._persons_for_media_item(media_item_id)
        elif activity_id is not None:
            found = self._persons_for_activity(activity_id)
        elif username is not None:
            found = [self._person_by_username(username)]
        else:
            raise BadRequestError("findPersons needs exactly one selector")
        return _env(found)

    def get_media_items(self, media_item_ids: Sequence[ObjectId]) -> ResultEnvelope:
        self._require(m.GET_MEDIA_ITEMS)
        return self._batch(m.GET_MEDIA_ITEMS, media_item_ids, self._fetch_media_item)

    def get_media_items_for_user(
        self, person_id: ObjectId | None = None, username: str | None = None
    ) -> ResultEnvelope:
        self._require(m.GET_MEDIA_ITEMS_FOR_USER)
        if person_id is not None:
            return _env(self._media_for_user(person_id))
        if username is not None:
            return _env(self._media_for_username(username))
        raise BadRequestError("getMediaItemsForUser needs a person id or username")

    def get_media_items_for_page(self, page_id: ObjectId) -> ResultEnvelope:
        self._require(m.GET_MEDIA_ITEMS_FOR_PAGE)
        return _env(self._media_for_page(page_id))

    def find_media_items(self, media_filter: MediaItemFilter) -> ResultEnvelope:
        self._require(m.FIND_MEDIA_ITEMS)
        return _env(self._search_media(media_filter))

    def find_relevant_media_items(self, media_item_id: ObjectId) -> ResultEnvelope:
        self._require(m.FIND_RELEVANT_MEDIA_ITEMS)
        return _env(self._relevant_media(media_item_id))

    def get_activities(self, activity_ids: Sequence[ObjectId]) -> ResultEnvelope:
        self._require(m.GET_ACTIVITIES)
        return self._batch(m.GET_ACTIVITIES, activity_ids, self._fetch_activity)

    def get_activities_for_user(self, person_id: ObjectId) -> ResultEnvelope:
        self._require(m.GET_ACTIVITIES_FOR_USER)
        return _env(self._activities_for_user(person_id))

    def find_activities(self, activity_filter: ActivityFilter) -> ResultEnvelope:
        self._require(m.FIND_ACTIVITIES)
        return _env(self._search_activities(activity_filter))

    def get_comments(self, comment_ids: Sequence[ObjectId]) -> ResultEnvelope:
        self._require(m.GET_COMMENTS)
        return self._batch(m.GET_COMMENTS, comment_ids, self._fetch_comment)

    def get_comments_for_media_item(self, media_item_id: ObjectId) -> ResultEnvelope:
        self._require(m.GET_COMMENTS_FOR_MEDIA_ITEM)
        return _env(self._comments_for_media_item(media_item_id))

    def get_comments_for_activity(self, activity_id: ObjectId) -> ResultEnvelope:
        self._require(m.GET_COMMENTS_FOR_ACTIVITY)
        return _env(self._comments_for_activity(activity_id))

    def post_message(self, person_id: ObjectId, post_text: str, token: AuthToken | None) -> ResultEnvelope:
        self._require(m.POST_MESSAGE)
        self._check_token(token, person_id)
        if not post_text:
            raise BadRequestError("post text must be nonempty")
        limit = self._config.max_post_length
        if limit is not None and len(post_text) > limit:
            raise BadRequestError(f"post text exceeds the {limit}-character limit of {self.network}")
        return ResultEnvelope((self._create_post(person_id, post_text, token),), ())

    # -- shared machinery ---------------------------------------------------

    def _require(self, method: str) -> None:
        if not self.capability().supports(method):
            raise UnsupportedOperationError(f"{self.network} does not support {method}")

    def _check_token(self, token: AuthToken | None, person_id: ObjectId) -> None:
        # Rejections here happen before any backend call; the backend still
        # validates the token string itself.
        if token is None:
            raise AuthRequiredError("this method requires a user auth token")
        if token.network != self.network:
            raise AuthInvalidError(f"token is bound to {token.network}, not {self.network}")
        if token.expired():
            raise AuthInvalidError("token expired")
        if token.subject and token.subject != person_id.id:
            raise AuthInvalidError("token subject does not match the target person")

    def _batch(
        self,
        op: str,
        ids: Sequence[ObjectId],
        fetch: Callable[[ObjectId], T],
    ) -> ResultEnvelope:
        """Fetch ids one by one, isolating failures per id. Once the backend
        looks down (connect failure / timeout), the rest of the batch is
        failed without further calls so latency stays bounded."""
        results: list[T] = []
        errors = []
        down: SociosError | None = None
        for oid in ids:
            if down is not None:
                errors.append(error_from_exception(down, self.network, op, oid))
                continue
            try:
                results.append(fetch(oid))
            except (BackendUnavailableError, BackendTimeoutError) as exc:
                errors.append(error_from_exception(exc, self.network, op, oid))
                down = exc
            except SociosError as exc:
                errors.append(error_from_exception(exc, self.network, op, oid))
        return ResultEnvelope(tuple(results), tuple(errors))

    # -- per-network hooks --------------------------------------------------

    def _fetch_person(self, person_id: ObjectId):
        raise NotImplementedError

    def _fetch_connected(self, person_id: ObjectId):
        raise NotImplementedError

    def _fetch_connected_private(self, person_id: ObjectId, token: AuthToken):
        raise NotImplementedError

    def _search_persons(self, keywords: tuple[str, ...]):
        raise NotImplementedError

    def _person_by_username(self, username: str):
        raise NotImplementedError

    def _persons_for_media_item(self, media_item_id: ObjectId):
        raise NotImplementedError

    def _persons_for_activity(self, activity_id: ObjectId):
        raise NotImplementedError

    def _fetch_media_item(self, media_item_id: ObjectId):
        raise NotImplementedError

    def _media_for_user(self, person_id: ObjectId):
        raise NotImplementedError

    def _media_for_username(self, username: str):
        raise NotImplementedError

    def _media_for_page(self, page_id: ObjectId):
        raise NotImplementedError

    def _search_media(self, media_filter: MediaItemFilter):
        raise NotImplementedError

    def _relevant_media(self, media_item_id: ObjectId):
        raise NotImplementedError

    def _fetch_activity(self, activity_id: ObjectId):
        raise NotImplementedError

    def _activities_for_user(self, person_id: ObjectId):
        raise NotImplementedError

    def _search_activities(self, activity_filter: ActivityFilter):
        raise NotImplementedError

    def _fetch_comment(self, comment_id: ObjectId):
        raise NotImplementedError

    def _comments_for_media_item(self, media_item_id: ObjectId):
        raise NotImplementedError

    def _comments_for_activity(self, activity_id: ObjectId):
        raise NotImplementedError

    def _create_post(self, person_id: ObjectId, post_text: str, token: AuthToken):
        raise NotImplementedError


def _env(items: Iterable) -> ResultEnvelope:
    return ResultEnvelope(tuple(items), ())
