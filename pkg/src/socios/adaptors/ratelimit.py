"""Process-wide token bucket guarding calls to one backend.

Capacity max_calls, continuous refill of max_calls/per_window. Exceeding
the budget fails fast (no queueing) so fan-out latency stays bounded.
"""
from __future__ import annotations

import threading
import time
from typing import Callable

from .capability import RateLimit


class TokenBucket:
    def __init__(self, limit: RateLimit, clock: Callable[[], float] = time.monotonic):
        self._capacity = float(limit.max_calls)
        self._rate = limit.max_calls / limit.per_window_seconds
        self._clock = clock
        self._tokens = self._capacity
        self._last = clock()
        self._lock = threading.Lock()

    def try_acquire(self) -> bool:
        """Consume one token if available; never blocks."""
        with self._lock:
            now = self._clock()
            self._tokens = min(self._capacity, self._tokens + (now - self._last) * self._rate)
            self._last = now
            if self._tokens >= 1.0:
                self._tokens -= 1.0
                return True
            return False
