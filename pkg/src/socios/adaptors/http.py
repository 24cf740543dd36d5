"""HTTP client used by adaptors to talk to their backend.

Every call first takes a token from the network's shared budget; transport
failures and backend statuses are mapped onto the structured error
vocabulary, so adaptor code deals only in canonical objects and
SociosError exceptions.
"""
from __future__ import annotations

from typing import Any

import requests

from ..errors import (
    AuthInvalidError,
    AuthRequiredError,
    BackendTimeoutError,
    BackendUnavailableError,
    BadRequestError,
    NotFoundError,
    RateLimitedError,
)
from .base import SnsAdaptor
from .ratelimit import TokenBucket
from .registry import NetworkConfig


class BackendClient:
    def __init__(self, endpoint: str, timeout_seconds: float, bucket: TokenBucket):
        self._base = endpoint.rstrip("/")
        self._timeout = timeout_seconds
        self._bucket = bucket

    def get(self, path: str, params: dict | None = None, bearer: str | None = None) -> Any:
        return self._request("GET", path, params=params, bearer=bearer)

    def post(self, path: str, payload: dict | None = None, bearer: str | None = None) -> Any:
        return self._request("POST", path, payload=payload, bearer=bearer)

    def _request(self, method, path, params=None, payload=None, bearer=None) -> Any:
        if not self._bucket.try_acquire():
            raise RateLimitedError("local call budget exhausted")
        headers = {"Authorization": f"Bearer {bearer}"} if bearer else {}
        try:
            resp = requests.request(
                method,
                self._base + path,
                params=params,
                json=payload,
                headers=headers,
                timeout=self._timeout,
            )
        except requests.Timeout as exc:
            raise BackendTimeoutError(f"backend did not answer within {self._timeout}s") from exc
        except requests.ConnectionError as exc:
            raise BackendUnavailableError("backend connection failed") from exc
        try:
            return self._handle(resp, sent_auth=bearer is not None)
        finally:
            resp.close()

    def _handle(self, resp: requests.Response, sent_auth: bool) -> Any:
        status = resp.status_code
        if 200 <= status < 300:
            try:
                return resp.json()
            except ValueError as exc:
                raise BackendUnavailableError("backend returned non-JSON body") from exc
        snippet = resp.text[:200]
        if status == 404:
            raise NotFoundError(f"backend reports unknown object: {snippet}")
        if status in (401, 403):
            if sent_auth:
                raise AuthInvalidError(f"backend rejected the token: {snippet}")
            raise AuthRequiredError(f"backend requires authentication: {snippet}")
        if status == 429:
            raise RateLimitedError(f"backend throttled the call: {snippet}")
        if status == 400:
            raise BadRequestError(f"backend rejected the request: {snippet}")
        raise BackendUnavailableError(f"backend answered {status}: {snippet}")


class HttpSnsAdaptor(SnsAdaptor):
    """Adaptor backed by a live HTTP endpoint from the network config."""

    def __init__(self, config: NetworkConfig, bucket: TokenBucket):
        super().__init__(config, bucket)
        if not config.endpoint:
            raise ValueError(f"network {config.name!r} has no endpoint configured")
        self._client = BackendClient(config.endpoint, config.timeout_seconds, bucket)
