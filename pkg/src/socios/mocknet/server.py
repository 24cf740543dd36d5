"""Hermetic HTTP backend hosting one mock network.

Shared plumbing for the three mock networks: request logging, declarative
fault injection, bearer-token auth, fixture mutation, and an `/_admin/*`
surface for the test harness and CLI. Admin traffic is neither logged nor
fault-injected; the request log records exactly the native API calls the
gateway stack makes.
"""
from __future__ import annotations

import json
import logging
import threading
import time
import uuid
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from random import Random
from urllib.parse import parse_qs, urlparse

from ..isotime import ms_to_iso, now_ms

log = logging.getLogger(__name__)


@dataclass
class FaultProfile:
    """Declarative failure mode applied to every native request."""

    down: bool = False
    latency_seconds: float = 0.0
    error_rate: float = 0.0


class RequestLog:
    def __init__(self):
        self._entries: list[dict] = []
        self._lock = threading.Lock()

    def record(self, method: str, path: str) -> None:
        with self._lock:
            self._entries.append({
                "seq": len(self._entries),
                "ts_ms": now_ms(),
                "mono": time.monotonic(),
                "method": method,
                "path": path,
            })

    def entries(self) -> list[dict]:
        with self._lock:
            return list(self._entries)

    def clear(self) -> int:
        with self._lock:
            n = len(self._entries)
            self._entries.clear()
            return n


class TokenTable:
    """Backend-issued bearer tokens, bound to a subject with an expiry."""

    def __init__(self):
        self._tokens: dict[str, dict] = {}
        self._lock = threading.Lock()

    def issue(self, network: str, subject: str, ttl_seconds: float) -> dict:
        token = f"{network}-{uuid.uuid4().hex}"
        expires_at = now_ms() + int(ttl_seconds * 1000)
        with self._lock:
            self._tokens[token] = {"subject": subject, "expires_at_ms": expires_at}
        return {
            "token": token,
            "network": network,
            "subject": subject,
            "expiresAt": ms_to_iso(expires_at),
        }

    def subject_of(self, token: str | None) -> str | None:
        if not token:
            return None
        with self._lock:
            rec = self._tokens.get(token)
        if rec is None or rec["expires_at_ms"] <= now_ms():
            return None
        return rec["subject"]


class HttpError(Exception):
    """Native-route failure; each app renders it in its own error shape."""

    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


class MockNetworkApp:
    """One mock backend: fixture state plus native route handling.

    Subclasses implement handle()/mutate()/error_body()/subject_exists()
    over their own native schema.
    """

    name: str

    def __init__(self, seed: int):
        self.seed = seed
        self.tokens = TokenTable()
        self.faults = FaultProfile()
        self.request_log = RequestLog()
        self._fault_rng = Random(f"{self.name}/faults/{seed}")
        self._state_lock = threading.Lock()

    # Native routing; raise HttpError for native failures.
    def handle(self, method: str, parts: list[str], params: dict[str, str],
               bearer: str | None, body: dict | None) -> tuple[int, dict]:
        raise NotImplementedError

    def mutate(self, op: dict) -> dict:
        raise NotImplementedError

    def error_body(self, status: int, message: str) -> dict:
        raise NotImplementedError

    def subject_exists(self, subject: str) -> bool:
        raise NotImplementedError

    def reset(self) -> None:
        raise NotImplementedError

    # -- helpers shared by the concrete apps --------------------------------

    def authenticated_subject(self, bearer: str | None) -> str:
        subject = self.tokens.subject_of(bearer)
        if subject is None:
            raise HttpError(401, "missing, unknown or expired token")
        return subject

    def require_own_data(self, bearer: str | None, owner_id: str) -> str:
        subject = self.authenticated_subject(bearer)
        if subject != owner_id:
            raise HttpError(403, "token subject may only read their own private data")
        return subject

    def roll_injected_error(self) -> bool:
        if self.faults.error_rate <= 0:
            return False
        return self._fault_rng.random() < self.faults.error_rate


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    app: MockNetworkApp  # set on the generated subclass

    def log_message(self, fmt, *args):  # quiet; the request log is queryable
        log.debug("%s %s", self.app.name, fmt % args)

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    def _dispatch(self, method: str) -> None:
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        params = {k: v[0] for k, v in parse_qs(url.query, keep_blank_values=True).items()}
        body = self._read_body()
        if parts and parts[0] == "_admin":
            self._admin(method, parts[1:], params, body)
            return

        app = self.app
        app.request_log.record(method, self.path)
        if app.faults.down:
            # Simulate a dead backend: drop the connection without a response.
            self.close_connection = True
            self.connection.close()
            return
        if app.faults.latency_seconds > 0:
            time.sleep(app.faults.latency_seconds)
        if app.roll_injected_error():
            self._send(500, app.error_body(500, "injected backend failure"))
            return

        bearer = None
        auth = self.headers.get("Authorization", "")
        if auth.startswith("Bearer "):
            bearer = auth[len("Bearer "):]
        try:
            status, payload = app.handle(method, parts, params, bearer, body)
        except HttpError as exc:
            self._send(exc.status, app.error_body(exc.status, exc.message))
            return
        except Exception:
            log.exception("unhandled error in %s native route %s", app.name, self.path)
            self._send(500, app.error_body(500, "internal error"))
            return
        self._send(status, payload)

    def _admin(self, method: str, parts: list[str], params: dict, body: dict | None) -> None:
        app = self.app
        body = body or {}
        try:
            if method == "GET" and parts == ["ping"]:
                self._send(200, {"ok": True, "network": app.name})
            elif method == "GET" and parts == ["log"]:
                self._send(200, {"entries": app.request_log.entries()})
            elif method == "POST" and parts == ["log", "clear"]:
                self._send(200, {"cleared": app.request_log.clear()})
            elif method == "GET" and parts == ["faults"]:
                f = app.faults
                self._send(200, {"down": f.down, "latencySeconds": f.latency_seconds,
                                 "errorRate": f.error_rate})
            elif method == "POST" and parts == ["faults"]:
                f = app.faults
                f.down = bool(body.get("down", f.down))
                f.latency_seconds = float(body.get("latencySeconds", f.latency_seconds))
                f.error_rate = float(body.get("errorRate", f.error_rate))
                self._send(200, {"down": f.down, "latencySeconds": f.latency_seconds,
                                 "errorRate": f.error_rate})
            elif method == "POST" and parts == ["token"]:
                subject = body.get("subject", "")
                if not app.subject_exists(subject):
                    self._send(404, {"error": f"unknown subject {subject!r}"})
                    return
                ttl = float(body.get("ttlSeconds", 3600.0))
                self._send(200, app.tokens.issue(app.name, subject, ttl))
            elif method == "GET" and parts == ["token", "validate"]:
                self._send(200, {"subject": app.tokens.subject_of(params.get("token"))})
            elif method == "POST" and parts == ["mutate"]:
                with app._state_lock:
                    self._send(200, app.mutate(body))
            elif method == "POST" and parts == ["reset"]:
                with app._state_lock:
                    app.reset()
                self._send(200, {"reset": True})
            else:
                self._send(404, {"error": "unknown admin route"})
        except HttpError as exc:
            self._send(exc.status, {"error": exc.message})
        except Exception:
            log.exception("admin route failed on %s", app.name)
            self._send(500, {"error": "internal error"})

    def _read_body(self) -> dict | None:
        length = int(self.headers.get("Content-Length") or 0)
        if length <= 0:
            return None
        raw = self.rfile.read(length)
        try:
            parsed = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            return None
        return parsed if isinstance(parsed, dict) else None

    def _send(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


class MockNetworkServer:
    """Threaded HTTP server wrapping one MockNetworkApp."""

    def __init__(self, app: MockNetworkApp, host: str = "127.0.0.1", port: int = 0):
        handler = type(f"{app.name.capitalize()}Handler", (_Handler,), {"app": app})
        self.app = app
        self._httpd = ThreadingHTTPServer((host, port), handler)
        self._httpd.daemon_threads = True
        self._thread: threading.Thread | None = None

    @property
    def url(self) -> str:
        host, port = self._httpd.server_address[:2]
        return f"http://{host}:{port}"

    def start(self) -> "MockNetworkServer":
        self._thread = threading.Thread(
            target=lambda: self._httpd.serve_forever(poll_interval=0.05),
            name=f"mock-{self.app.name}", daemon=True,
        )
        self._thread.start()
        return self

    def stop(self) -> None:
        self._httpd.shutdown()
        self._httpd.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)
            self._thread = None
