"""One-call assembly of the full demo stack: three mocks + core + gateway.

Used by `socios serve` and by the test suite. Everything binds to
127.0.0.1; port 0 picks free ports.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .adaptors.auth import AuthToken
from .adaptors.capability import RateLimit
from .adaptors.registry import AdaptorRegistry
from .bootstrap import MOCK_NETWORKS, seed_registry
from .core import CoreService
from .gateway import GatewayServer
from .isotime import iso_to_ms, now_ms
from .mocknet import ChirperApp, MockNetworkServer, PicshareApp, StreamhubApp
from .mocknet.fixtures import DEFAULT_SEED

_APPS = {"chirper": ChirperApp, "picshare": PicshareApp, "streamhub": StreamhubApp}


@dataclass
class DemoStack:
    mocks: dict[str, MockNetworkServer]
    registry: AdaptorRegistry
    core: CoreService
    gateway: GatewayServer
    seed: int
    _stopped: bool = field(default=False, init=False)

    @classmethod
    def launch(
        cls,
        *,
        seed: int = DEFAULT_SEED,
        gateway_port: int = 0,
        mock_ports: dict[str, int] | None = None,
        timeout_seconds: float = 5.0,
        rate_limits: dict[str, RateLimit] | None = None,
        fanout_deadline_seconds: float = 10.0,
    ) -> "DemoStack":
        mock_ports = mock_ports or {}
        mocks: dict[str, MockNetworkServer] = {}
        for name in MOCK_NETWORKS:
            server = MockNetworkServer(_APPS[name](seed), port=mock_ports.get(name, 0))
            mocks[name] = server.start()
        registry = seed_registry(
            {name: server.url for name, server in mocks.items()},
            timeout_seconds=timeout_seconds,
            rate_limits=rate_limits,
        )
        core = CoreService(registry, fanout_deadline_seconds=fanout_deadline_seconds)
        gateway = GatewayServer(core, port=gateway_port).start()
        return cls(mocks=mocks, registry=registry, core=core, gateway=gateway, seed=seed)

    def app(self, network: str):
        return self.mocks[network].app

    def issue_token(self, network: str, subject: str, ttl_seconds: float = 3600.0) -> AuthToken:
        """Issue a backend token directly from the mock (stands in for the
        OAuth dance a real front-end would run)."""
        grant = self.app(network).tokens.issue(network, subject, ttl_seconds)
        return AuthToken(
            token=grant["token"],
            network=network,
            subject=subject,
            expires_at_ms=iso_to_ms(grant["expiresAt"]),
        )

    def expired_token(self, network: str, subject: str) -> AuthToken:
        grant = self.app(network).tokens.issue(network, subject, -60.0)
        return AuthToken(token=grant["token"], network=network, subject=subject,
                         expires_at_ms=now_ms() - 60_000)

    def request_log(self, network: str) -> list[dict]:
        return self.app(network).request_log.entries()

    def clear_request_logs(self) -> None:
        for name in self.mocks:
            self.app(name).request_log.clear()

    def set_faults(self, network: str, *, down: bool = False,
                   latency_seconds: float = 0.0, error_rate: float = 0.0) -> None:
        faults = self.app(network).faults
        faults.down = down
        faults.latency_seconds = latency_seconds
        faults.error_rate = error_rate

    def clear_faults(self) -> None:
        for name in self.mocks:
            self.set_faults(name)

    def mutate(self, network: str, op: dict) -> dict:
        app = self.app(network)
        with app._state_lock:
            return app.mutate(op)

    def stop(self) -> None:
        if self._stopped:
            return
        self._stopped = True
        self.gateway.stop()
        for server in self.mocks.values():
            server.stop()
