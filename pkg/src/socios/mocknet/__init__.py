"""Hermetic mock backends standing in for live social networks."""

from .chirper import ChirperApp
from .picshare import PicshareApp
from .server import FaultProfile, MockNetworkApp, MockNetworkServer
from .streamhub import StreamhubApp

__all__ = [
    "ChirperApp",
    "FaultProfile",
    "MockNetworkApp",
    "MockNetworkServer",
    "PicshareApp",
    "StreamhubApp",
]
