"""Canonical object model: types, validation, wire format, schema."""

from .types import (
    Activity,
    ActivityFilter,
    Address,
    AddressFilter,
    AreaFilter,
    Comment,
    DateTimeFilter,
    License,
    LocationFilter,
    MediaItem,
    MediaItemFilter,
    MediaType,
    Name,
    ObjectId,
    Person,
    PersonFilter,
    SocialNetworkId,
    is_valid_network_name,
)
from .validation import Violation, validate
from .wire import ParseError, parse_canonical, serialize_canonical

__all__ = [
    "Activity",
    "ActivityFilter",
    "Address",
    "AddressFilter",
    "AreaFilter",
    "Comment",
    "DateTimeFilter",
    "License",
    "LocationFilter",
    "MediaItem",
    "MediaItemFilter",
    "MediaType",
    "Name",
    "ObjectId",
    "ParseError",
    "Person",
    "PersonFilter",
    "SocialNetworkId",
    "Violation",
    "is_valid_network_name",
    "parse_canonical",
    "serialize_canonical",
    "validate",
]
