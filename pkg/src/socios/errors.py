"""Error vocabulary shared by adaptors, the core service and the gateway.

Adaptors signal failures by raising a `SociosError` subclass; the core
service converts raised errors into per-query `QueryError` entries in the
result envelope, so one backend's failure never masks another's success.
"""
from __future__ import annotations

from enum import Enum


class ErrorCode(Enum):
    UNKNOWN_NETWORK = "UNKNOWN_NETWORK"
    UNSUPPORTED_OPERATION = "UNSUPPORTED_OPERATION"
    NOT_FOUND = "NOT_FOUND"
    AUTH_REQUIRED = "AUTH_REQUIRED"
    AUTH_INVALID = "AUTH_INVALID"
    BACKEND_UNAVAILABLE = "BACKEND_UNAVAILABLE"
    RATE_LIMITED = "RATE_LIMITED"
    TIMEOUT = "TIMEOUT"
    BAD_REQUEST = "BAD_REQUEST"
    INTERNAL = "INTERNAL"


class SociosError(Exception):
    """Base for failures that map onto a structured per-query error."""

    code = ErrorCode.INTERNAL

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UnknownNetworkError(SociosError):
    code = ErrorCode.UNKNOWN_NETWORK


class UnsupportedOperationError(SociosError):
    code = ErrorCode.UNSUPPORTED_OPERATION


class NotFoundError(SociosError):
    code = ErrorCode.NOT_FOUND


class AuthRequiredError(SociosError):
    code = ErrorCode.AUTH_REQUIRED


class AuthInvalidError(SociosError):
    code = ErrorCode.AUTH_INVALID


class BackendUnavailableError(SociosError):
    code = ErrorCode.BACKEND_UNAVAILABLE


class RateLimitedError(SociosError):
    code = ErrorCode.RATE_LIMITED


class BackendTimeoutError(SociosError):
    code = ErrorCode.TIMEOUT


class BadRequestError(SociosError):
    code = ErrorCode.BAD_REQUEST


class DuplicateNetworkError(ValueError):
    """Same network name registered twice with a different factory."""
