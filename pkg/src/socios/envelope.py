"""The merged per-request result: successes plus structured per-query errors.

Every query in a request is accounted for exactly once — it contributed
results, produced exactly one QueryError, or (for searches) legitimately
matched nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeVar

from .errors import ErrorCode, SociosError
from .model.types import ObjectId, SocialNetworkId

T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class QueryError:
    socialNetwork: SocialNetworkId
    operation: str
    code: ErrorCode
    message: str
    objectId: ObjectId | None = None


@dataclass(frozen=True, slots=True)
class ResultEnvelope(Generic[T]):
    results: tuple[T, ...] = ()
    errors: tuple[QueryError, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "results", tuple(self.results))
        object.__setattr__(self, "errors", tuple(self.errors))

    @property
    def ok(self) -> bool:
        return not self.errors


def error_from_exception(
    exc: SociosError,
    network: SocialNetworkId,
    operation: str,
    object_id: ObjectId | None = None,
) -> QueryError:
    return QueryError(
        socialNetwork=network,
        operation=operation,
        code=exc.code,
        message=exc.message,
        objectId=object_id,
    )


def merge_envelopes(parts: list[ResultEnvelope]) -> ResultEnvelope:
    """Concatenate per-network envelopes in the given (request) order."""
    results: list = []
    errors: list[QueryError] = []
    for part in parts:
        results.extend(part.results)
        errors.extend(part.errors)
    return ResultEnvelope(tuple(results), tuple(errors))
