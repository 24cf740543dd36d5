"""socios: one canonical API over heterogeneous social-network backends."""

from .adaptors import AdaptorCapability, AdaptorRegistry, AuthToken, NetworkConfig, RateLimit, SnsAdaptor
from .core import CoreService
from .envelope import QueryError, ResultEnvelope
from .errors import ErrorCode, SociosError
from .stack import DemoStack

__version__ = "0.1.0"

__all__ = [
    "AdaptorCapability",
    "AdaptorRegistry",
    "AuthToken",
    "CoreService",
    "DemoStack",
    "ErrorCode",
    "NetworkConfig",
    "QueryError",
    "RateLimit",
    "ResultEnvelope",
    "SnsAdaptor",
    "SociosError",
    "__version__",
]
