"""HTTP/JSON gateway exposing the core service.

One endpoint per aggregation method under /sociosapi/v1/, with the routing
table loaded from the machine-readable description shipped as
gateway_endpoints.json. Partial failure is a successful aggregation: every
well-formed request answers 200 with a ResultEnvelope (errors ride inside
it); only malformed requests (400), unknown paths (404) and wrong verbs
(405) surface as non-200. Auth endpoints take the user token as an
`Authorization: Bearer` header plus an optional `subject` param defaulting
to the target person id. The HTTP layer adds no semantics of its own: the
body is byte-identical to serializing the same core-level call.
"""
from __future__ import annotations

import json
import logging
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from importlib import resources
from urllib.parse import parse_qs, urlparse

from .adaptors.auth import AuthToken
from .core import CoreService
from .errors import BadRequestError
from .isotime import iso_to_ms
from .model.types import (
    ActivityFilter,
    AddressFilter,
    AreaFilter,
    DateTimeFilter,
    LocationFilter,
    MediaItemFilter,
    ObjectId,
    PersonFilter,
    is_valid_network_name,
)
from .model.wire import dumps, serialize_envelope

log = logging.getLogger(__name__)

BASE_PATH = "/sociosapi/v1"


def endpoint_table() -> dict:
    """The machine-readable API description shipped with the package."""
    text = resources.files("socios").joinpath("gateway_endpoints.json").read_text("utf-8")
    return json.loads(text)


class _BadParams(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def _decode_params(defs: list[dict], raw: dict[str, list[str]]) -> dict:
    """Validate and convert query params per the endpoint description."""
    known = {d["name"] for d in defs} | {"format"}
    unknown = set(raw) - known
    if unknown:
        raise _BadParams(f"unknown parameter {sorted(unknown)[0]!r}")
    fmt = raw.get("format", ["json"])
    if fmt != ["json"]:
        raise _BadParams("format must be json")
    out: dict = {}
    for d in defs:
        name, kind = d["name"], d["type"]
        values = raw.get(name, [])
        if len(values) > 1:
            raise _BadParams(f"parameter {name!r} given more than once")
        value = values[0] if values and values[0] != "" else None
        if value is None:
            if d["required"]:
                raise _BadParams(f"missing required parameter {name!r}")
            continue
        out[name] = _convert(name, kind, value)
    return out


def _convert(name: str, kind: str, value: str):
    if kind == "string":
        return value
    if kind == "network":
        if not is_valid_network_name(value):
            raise _BadParams(f"{name} must be a lowercase network token")
        return value
    if kind == "list":
        return tuple(p for p in value.split(",") if p)
    if kind == "networkList":
        parts = tuple(p for p in value.split(",") if p)
        for p in parts:
            if not is_valid_network_name(p):
                raise _BadParams(f"{name} entries must be lowercase network tokens")
        return parts
    if kind == "number":
        try:
            return float(value)
        except ValueError:
            raise _BadParams(f"{name} must be a number") from None
    if kind == "timestamp":
        try:
            return iso_to_ms(value)
        except ValueError:
            raise _BadParams(f"{name} must be an ISO-8601 UTC timestamp") from None
    raise AssertionError(f"unhandled param type {kind}")


def _auth_token(params: dict, bearer: str | None) -> AuthToken | None:
    if bearer is None:
        return None
    network = params["sn"]
    subject = params.get("subject") or params.get("id") or ""
    return AuthToken(token=bearer, network=network, subject=subject, expires_at_ms=None)


def _location_filter(params: dict) -> LocationFilter | None:
    geo = [k for k in ("lat", "lon", "rad") if k in params]
    if geo and len(geo) != 3:
        raise _BadParams("lat, lon and rad must be given together")
    area = AreaFilter(params["lat"], params["lon"], params["rad"]) if geo else None
    addr = AddressFilter(country=params["country"]) if "country" in params else None
    if area is None and addr is None:
        return None
    return LocationFilter(addressFilter=addr, areaFilter=area)


def _created_filter(params: dict) -> DateTimeFilter | None:
    if "from" not in params and "to" not in params:
        return None
    return DateTimeFilter(from_=params.get("from"), to=params.get("to"))


# One invocation builder per endpoint name: params -> (args, kwargs).
def _invocation(endpoint: str, params: dict, token: AuthToken | None):
    oid = (lambda: ObjectId(params["id"], params["sn"]))
    if endpoint == "getPerson":
        return "get_persons", ([oid()],), {}
    if endpoint == "connectedPersons":
        return "connected_persons", (oid(),), {}
    if endpoint == "myConnectedPersons":
        return "my_connected_persons", (oid(), token), {}
    if endpoint == "findPersonsByKeyword":
        flt = PersonFilter(keywords=params["keywords"], sns=params.get("sns", ()))
        return "find_persons", (), {"person_filter": flt}
    if endpoint == "findPersonsByUsername":
        return "find_persons", (), {"username": (params["username"], params["sn"])}
    if endpoint == "findPersonsByMediaItem":
        return "find_persons", (), {"media_item_id": oid()}
    if endpoint == "findPersonsByActivity":
        return "find_persons", (), {"activity_id": oid()}
    if endpoint == "getMediaItem":
        return "get_media_items", ([oid()],), {}
    if endpoint == "getMediaItemsForUser":
        kwargs = {}
        if "id" in params:
            kwargs["person_id"] = oid()
        if "username" in params:
            kwargs["username"] = (params["username"], params["sn"])
        return "get_media_items_for_user", (), kwargs
    if endpoint == "getMediaItemsForPage":
        return "get_media_items_for_page", (oid(),), {}
    if endpoint == "findMediaItems":
        flt = MediaItemFilter(
            created=_created_filter(params),
            keywords=params.get("keywords", ()),
            location=_location_filter(params),
            language=params.get("lang"),
            licenseType=params.get("lic"),
            sns=params.get("sns", ()),
        )
        return "find_media_items", (flt,), {}
    if endpoint == "findRelevantMediaItems":
        return "find_relevant_media_items", (oid(),), {}
    if endpoint == "getActivity":
        return "get_activities", ([oid()],), {}
    if endpoint == "getActivitiesForUser":
        return "get_activities_for_user", (oid(),), {}
    if endpoint == "findActivities":
        flt = ActivityFilter(
            keywords=params["keywords"],
            language=params.get("lang"),
            sns=params.get("sns", ()),
        )
        return "find_activities", (flt,), {}
    if endpoint == "getComment":
        return "get_comments", ([oid()],), {}
    if endpoint == "getCommentsForMediaItem":
        return "get_comments_for_media_item", (oid(),), {}
    if endpoint == "getCommentsForActivity":
        return "get_comments_for_activity", (oid(),), {}
    if endpoint == "postMessage":
        return "post_message", (oid(), params["msg"], token), {}
    raise AssertionError(f"unhandled endpoint {endpoint}")


class _GatewayHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    core: CoreService
    endpoints: dict[str, dict]

    def log_message(self, fmt, *args):
        log.debug("gateway %s", fmt % args)

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    def _dispatch(self, verb: str) -> None:
        url = urlparse(self.path)
        if not url.path.startswith(BASE_PATH + "/"):
            self._error(404, "NOT_FOUND", "unknown path; endpoints live under " + BASE_PATH)
            return
        leaf = url.path[len(BASE_PATH) + 1:]
        if leaf == "health":
            self._health()
            return
        spec = self.endpoints.get(leaf)
        if spec is None:
            self._error(404, "NOT_FOUND", f"no endpoint named {leaf!r}")
            return
        if spec["httpMethod"] != verb:
            self._error(405, "BAD_REQUEST", f"{leaf} requires {spec['httpMethod']}")
            return
        raw = parse_qs(url.query, keep_blank_values=True)
        try:
            params = _decode_params(spec["params"], raw)
            token = _auth_token(params, self._bearer()) if spec.get("auth") else None
            method, args, kwargs = _invocation(leaf, params, token)
        except _BadParams as exc:
            self._error(400, "BAD_REQUEST", exc.message)
            return
        try:
            envelope = getattr(self.core, method)(*args, **kwargs)
        except BadRequestError as exc:
            self._error(400, "BAD_REQUEST", exc.message)
            return
        except Exception:
            log.exception("core call failed for %s", leaf)
            self._error(500, "INTERNAL", "internal gateway error")
            return
        self._send(200, serialize_envelope(envelope))

    def _health(self) -> None:
        registry = self.core.registry
        networks = []
        for name in registry.network_names():
            entry = registry.entry(name)
            cap = entry.capability
            networks.append({
                "name": name,
                "endpoint": entry.config.endpoint,
                "supportedMethods": sorted(cap.supported_methods),
                "requiresAuth": sorted(cap.requires_auth),
                "rateLimit": {
                    "maxCalls": cap.rate_limit.max_calls,
                    "perWindowSeconds": cap.rate_limit.per_window_seconds,
                },
            })
        self._send(200, dumps({"networks": networks}))

    def _bearer(self) -> str | None:
        auth = self.headers.get("Authorization", "")
        return auth[len("Bearer "):] if auth.startswith("Bearer ") else None

    def _error(self, status: int, code: str, message: str) -> None:
        self._send(status, dumps({"code": code, "message": message}))

    def _send(self, status: int, body: str) -> None:
        data = body.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


class GatewayServer:
    def __init__(self, core: CoreService, host: str = "127.0.0.1", port: int = 0):
        table = endpoint_table()
        endpoints = {e["name"]: e for e in table["endpoints"]}
        handler = type("BoundGatewayHandler", (_GatewayHandler,),
                       {"core": core, "endpoints": endpoints})
        self._httpd = ThreadingHTTPServer((host, port), handler)
        self._httpd.daemon_threads = True
        self._thread: threading.Thread | None = None

    @property
    def url(self) -> str:
        host, port = self._httpd.server_address[:2]
        return f"http://{host}:{port}"

    @property
    def base_url(self) -> str:
        return self.url + BASE_PATH

    def start(self) -> "GatewayServer":
        self._thread = threading.Thread(
            target=lambda: self._httpd.serve_forever(poll_interval=0.05),
            name="gateway", daemon=True,
        )
        self._thread.start()
        return self

    def stop(self) -> None:
        self._httpd.shutdown()
        self._httpd.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)
            self._thread = None
