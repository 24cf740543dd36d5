"""The single point of reference over all registered networks.

Each public method partitions its request by network, instantiates the
relevant adaptors (one per invocation), dispatches them concurrently, and
merges every outcome into one ResultEnvelope. One network's failure is
converted into per-query errors and never masks another network's results.

Ordering is deterministic: request-validation errors first, then network
groups in the order each network first appears in the request (or the
registry order for implicit "all networks" searches); within a group,
input-id order for id lookups and backend order for searches. Duplicate
ids are preserved, so envelope accounting stays 1:1 with the request.

Request-shape violations (wrong selector count, empty or clause-less
filters, empty message text) raise BadRequestError instead of producing an
envelope; per-network and per-id failures always ride inside the envelope.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, wait
from dataclasses import dataclass
from typing import Callable, Sequence

from .adaptors import methods as m
from .adaptors.auth import AuthToken
from .adaptors.base import SnsAdaptor
from .adaptors.registry import AdaptorRegistry
from .envelope import QueryError, ResultEnvelope, error_from_exception, merge_envelopes
from .errors import (
    BackendTimeoutError,
    BadRequestError,
    ErrorCode,
    SociosError,
    UnknownNetworkError,
    UnsupportedOperationError,
)
from .model.types import (
    ActivityFilter,
    MediaItemFilter,
    ObjectId,
    PersonFilter,
)
from .model.validation import validate

log = logging.getLogger(__name__)

DEFAULT_FANOUT_DEADLINE_SECONDS = 10.0
DEFAULT_SEARCH_CAP_PER_NETWORK = 100

Username = tuple[str, str]  # (backend username, network)


@dataclass(frozen=True)
class _Dispatch:
    network: str
    queries: tuple[ObjectId | None, ...]
    invoke: Callable[[SnsAdaptor], ResultEnvelope]
    cap_results: bool = False


class CoreService:
    def __init__(
        self,
        registry: AdaptorRegistry,
        *,
        fanout_deadline_seconds: float = DEFAULT_FANOUT_DEADLINE_SECONDS,
        search_cap_per_network: int = DEFAULT_SEARCH_CAP_PER_NETWORK,
    ):
        self.registry = registry
        self._deadline = fanout_deadline_seconds
        self._search_cap = search_cap_per_network

    # -- person methods -------------------------------------------------------

    def get_persons(self, person_ids: Sequence[ObjectId]) -> ResultEnvelope:
        return self._id_batch_op(m.GET_PERSONS, person_ids,
                                 lambda adaptor, batch: adaptor.get_persons(batch))

    def connected_persons(self, person_id: ObjectId) -> ResultEnvelope:
        return self._single_op(m.CONNECTED_PERSONS, person_id,
                               lambda adaptor: adaptor.connected_persons(person_id))

    def my_connected_persons(self, person_id: ObjectId, token: AuthToken | None) -> ResultEnvelope:
        return self._single_op(m.MY_CONNECTED_PERSONS, person_id,
                               lambda adaptor: adaptor.my_connected_persons(person_id, token))

    def find_persons(
        self,
        person_filter: PersonFilter | None = None,
        media_item_id: ObjectId | None = None,
        activity_id: ObjectId | None = None,
        username: Username | None = None,
    ) -> ResultEnvelope:
        selectors = [s for s in (person_filter, media_item_id, activity_id, username)
                     if s is not None]
        if len(selectors) != 1:
            raise BadRequestError("findPersons takes exactly one selector")
        if person_filter is not None:
            self._check_keywords(person_filter.keywords)
            return self._search_op(
                m.FIND_PERSONS, person_filter.sns,
                lambda adaptor: adaptor.find_persons(person_filter=person_filter),
                cap_results=True,
            )
        if media_item_id is not None:
            return self._single_op(
                m.FIND_PERSONS, media_item_id,
                lambda adaptor: adaptor.find_persons(media_item_id=media_item_id))
        if activity_id is not None:
            return self._single_op(
                m.FIND_PERSONS, activity_id,
                lambda adaptor: adaptor.find_persons(activity_id=activity_id))
        name, network = self._check_username(username)
        return self._network_op(
            m.FIND_PERSONS, network,
            lambda adaptor: adaptor.find_persons(username=name))

    # -- media methods ----------------------------------------------------------

    def get_media_items(self, media_item_ids: Sequence[ObjectId]) -> ResultEnvelope:
        return self._id_batch_op(m.GET_MEDIA_ITEMS, media_item_ids,
                                 lambda adaptor, batch: adaptor.get_media_items(batch))

    def get_media_items_for_user(
        self,
        person_id: ObjectId | None = None,
        username: Username | None = None,
    ) -> ResultEnvelope:
        if (person_id is None) == (username is None):
            raise BadRequestError("getMediaItemsForUser takes exactly one of person id / username")
        if person_id is not None:
            return self._single_op(
                m.GET_MEDIA_ITEMS_FOR_USER, person_id,
                lambda adaptor: adaptor.get_media_items_for_user(person_id=person_id))
        name, network = self._check_username(username)
        return self._network_op(
            m.GET_MEDIA_ITEMS_FOR_USER, network,
            lambda adaptor: adaptor.get_media_items_for_user(username=name))

    def get_media_items_for_page(self, page_id: ObjectId) -> ResultEnvelope:
        return self._single_op(m.GET_MEDIA_ITEMS_FOR_PAGE, page_id,
                               lambda adaptor: adaptor.get_media_items_for_page(page_id))

    def find_media_items(self, media_filter: MediaItemFilter) -> ResultEnvelope:
        self._check_filter_valid(media_filter)
        has_clause = (media_filter.keywords or media_filter.created is not None
                      or media_filter.location is not None
                      or media_filter.language is not None
                      or media_filter.licenseType is not None)
        if not has_clause:
            raise BadRequestError("findMediaItems needs at least one filter clause")
        if media_filter.keywords:
            self._check_keywords(media_filter.keywords)
        return self._search_op(
            m.FIND_MEDIA_ITEMS, media_filter.sns,
            lambda adaptor: adaptor.find_media_items(media_filter),
            cap_results=True,
        )

    def find_relevant_media_items(self, media_item_id: ObjectId) -> ResultEnvelope:
        return self._single_op(
            m.FIND_RELEVANT_MEDIA_ITEMS, media_item_id,
            lambda adaptor: adaptor.find_relevant_media_items(media_item_id),
            cap_results=True,
        )

    # -- activity methods ---------------------------------------------------

    def get_activities(self, activity_ids: Sequence[ObjectId]) -> ResultEnvelope:
        return self._id_batch_op(m.GET_ACTIVITIES, activity_ids,
                                 lambda adaptor, batch: adaptor.get_activities(batch))

    def get_activities_for_user(self, person_id: ObjectId) -> ResultEnvelope:
        return self._single_op(m.GET_ACTIVITIES_FOR_USER, person_id,
                               lambda adaptor: adaptor.get_activities_for_user(person_id))

    def find_activities(self, activity_filter: ActivityFilter) -> ResultEnvelope:
        self._check_filter_valid(activity_filter)
        self._check_keywords(activity_filter.keywords)
        return self._search_op(
            m.FIND_ACTIVITIES, activity_filter.sns,
            lambda adaptor: adaptor.find_activities(activity_filter),
            cap_results=True,
        )

    # -- comment methods ------------------------------------------------------

    def get_comments(self, comment_ids: Sequence[ObjectId]) -> ResultEnvelope:
        return self._id_batch_op(m.GET_COMMENTS, comment_ids,
                                 lambda adaptor, batch: adaptor.get_comments(batch))

    def get_comments_for_media_item(self, media_item_id: ObjectId) -> ResultEnvelope:
        return self._single_op(m.GET_COMMENTS_FOR_MEDIA_ITEM, media_item_id,
                               lambda adaptor: adaptor.get_comments_for_media_item(media_item_id))

    def get_comments_for_activity(self, activity_id: ObjectId) -> ResultEnvelope:
        return self._single_op(m.GET_COMMENTS_FOR_ACTIVITY, activity_id,
                               lambda adaptor: adaptor.get_comments_for_activity(activity_id))

    # -- posting ------------------------------------------------------------

    def post_message(self, person_id: ObjectId, post_text: str,
                     token: AuthToken | None) -> ResultEnvelope:
        if not post_text:
            raise BadRequestError("postMessage needs nonempty text")
        return self._single_op(m.POST_MESSAGE, person_id,
                               lambda adaptor: adaptor.post_message(person_id, post_text, token))

    # -- request validation helpers -------------------------------------------

    @staticmethod
    def _check_keywords(keywords) -> None:
        if not keywords:
            raise BadRequestError("keyword list must be nonempty")
        if any(not k for k in keywords):
            raise BadRequestError("keywords must be nonempty strings")

    @staticmethod
    def _check_username(username) -> Username:
        if (not isinstance(username, tuple) or len(username) != 2
                or not username[0] or not username[1]):
            raise BadRequestError("username selector must be (username, network)")
        return username

    @staticmethod
    def _check_filter_valid(flt) -> None:
        violations = validate(flt)
        if violations:
            raise BadRequestError(
                "invalid filter: " + "; ".join(f"{v.path}: {v.message}" for v in violations))

    # -- dispatch machinery ----------------------------------------------------

    def _id_batch_op(self, op: str, ids: Sequence[ObjectId], call) -> ResultEnvelope:
        bad: list[QueryError] = []
        groups: dict[str, list[ObjectId]] = {}
        for oid in ids:
            if not oid.id:
                bad.append(QueryError(oid.socialNetwork, op, ErrorCode.BAD_REQUEST,
                                      "object id must be nonempty", objectId=oid))
                continue
            groups.setdefault(oid.socialNetwork, []).append(oid)
        dispatches = [
            _Dispatch(network, tuple(batch),
                      lambda adaptor, b=tuple(batch): call(adaptor, b))
            for network, batch in groups.items()
        ]
        parts = self._gather(op, dispatches)
        return merge_envelopes(
            [ResultEnvelope((), tuple(bad))] + [parts[d.network] for d in dispatches])

    def _single_op(self, op: str, oid: ObjectId, invoke, cap_results: bool = False) -> ResultEnvelope:
        if not oid.id:
            return ResultEnvelope((), (QueryError(
                oid.socialNetwork, op, ErrorCode.BAD_REQUEST,
                "object id must be nonempty", objectId=oid),))
        dispatch = _Dispatch(oid.socialNetwork, (oid,), invoke, cap_results)
        return self._gather(op, [dispatch])[oid.socialNetwork]

    def _network_op(self, op: str, network: str, invoke) -> ResultEnvelope:
        dispatch = _Dispatch(network, (None,), invoke)
        return self._gather(op, [dispatch])[network]

    def _search_op(self, op: str, sns: Sequence[str], invoke, cap_results: bool) -> ResultEnvelope:
        networks: list[str] = []
        if sns:
            for name in sns:  # first occurrence wins; each network queried once
                if name not in networks:
                    networks.append(name)
        else:
            networks = self.registry.networks_supporting(op)
        dispatches = [_Dispatch(network, (None,), invoke, cap_results)
                      for network in networks]
        parts = self._gather(op, dispatches)
        return merge_envelopes([parts[d.network] for d in dispatches])

    def _gather(self, op: str, dispatches: list[_Dispatch]) -> dict[str, ResultEnvelope]:
        if not dispatches:
            return {}
        out: dict[str, ResultEnvelope] = {}
        executor = ThreadPoolExecutor(max_workers=len(dispatches),
                                      thread_name_prefix=f"fanout-{op}")
        futures = {d.network: executor.submit(self._run_one, op, d) for d in dispatches}
        _, not_done = wait(futures.values(), timeout=self._deadline)
        for d in dispatches:
            future = futures[d.network]
            if future in not_done:
                future.cancel()
                exc = BackendTimeoutError(
                    f"{d.network} exceeded the {self._deadline}s fan-out deadline")
                out[d.network] = self._errors_for_all(exc, op, d)
            else:
                out[d.network] = future.result()
        executor.shutdown(wait=False)
        return out

    def _run_one(self, op: str, d: _Dispatch) -> ResultEnvelope:
        try:
            entry = self.registry.entry(d.network)
        except UnknownNetworkError as exc:
            return self._errors_for_all(exc, op, d)
        if not entry.capability.supports(op):
            exc = UnsupportedOperationError(f"{d.network} does not support {op}")
            return self._errors_for_all(exc, op, d)
        try:
            adaptor = self.registry.create_adaptor(d.network)
            env = d.invoke(adaptor)
        except SociosError as exc:
            return self._errors_for_all(exc, op, d)
        except Exception as exc:
            log.exception("adaptor for %s failed on %s", d.network, op)
            internal = SociosError(f"internal adaptor failure: {exc}")
            return self._errors_for_all(internal, op, d)
        if d.cap_results and len(env.results) > self._search_cap:
            env = ResultEnvelope(env.results[: self._search_cap], env.errors)
        return env

    def _errors_for_all(self, exc: SociosError, op: str, d: _Dispatch) -> ResultEnvelope:
        errors = tuple(
            error_from_exception(exc, d.network, op, oid) for oid in d.queries
        )
        return ResultEnvelope((), errors)
