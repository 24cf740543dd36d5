"""Shared raw material for the deterministic fixture generators.

Every mock network builds its dataset from one `random.Random` seeded with
`"{network}/{seed}"`, so a given (network, seed, FIXTURE_VERSION) triple
always produces byte-identical data.
"""
from __future__ import annotations

from random import Random

FIXTURE_VERSION = 1
DEFAULT_SEED = 2014

FIRST_NAMES = [
    "alice", "bruno", "carla", "dmitri", "elena", "farid", "grete", "hiro",
    "ines", "janek", "kaori", "lars", "marta", "nikos", "olga", "pavel",
    "rosa", "stefan", "tuva", "umar", "vera", "wendel", "xenia", "yann",
]

LAST_NAMES = [
    "adler", "bergman", "castellanos", "dubois", "eriksen", "fontaine",
    "garcia", "holt", "ishikawa", "jensen", "kovacs", "lindqvist",
    "moreau", "novak", "okafor", "papadopoulos", "quinn", "rossi",
    "sato", "tanaka", "ueda", "vargas", "weiss", "zhang",
]

# (city, country code, region, postal, street, lat, lon)
CITIES = [
    ("paris", "FR", "ile-de-france", "75004", "rue de rivoli", 48.8566, 2.3522),
    ("athens", "GR", "attica", "10558", "ermou street", 37.9838, 23.7275),
    ("berlin", "DE", "berlin", "10115", "invalidenstrasse", 52.52, 13.405),
    ("tokyo", "JP", "kanto", "1000001", "chiyoda dori", 35.6762, 139.6503),
    ("new york", "US", "ny", "10007", "chambers street", 40.7128, -74.006),
    ("london", "GB", "greater london", "EC1A", "aldersgate street", 51.5074, -0.1278),
]

TAG_WORDS = [
    "sunset", "beach", "street", "night", "mountain", "coffee", "bridge",
    "rain", "music", "food", "travel", "portrait", "river", "forest",
    "winter", "harbor", "festival", "market", "skyline", "garden",
]

PROSE_WORDS = [
    "morning", "light", "walking", "through", "quiet", "streets", "with",
    "friends", "found", "this", "amazing", "view", "over", "the", "old",
    "town", "after", "long", "day", "sharing", "some", "moments", "from",
    "our", "trip", "best", "spot", "in", "city", "tonight",
]

LANGUAGES = ["en", "fr", "de", "el", "es", "ja"]

# Fixture timestamps live in 2013-2014 (epoch ms).
TS_MIN_MS = 1_356_998_400_000  # 2013-01-01T00:00:00Z
TS_MAX_MS = 1_405_641_600_000  # 2014-07-18T00:00:00Z


def rng_for(network: str, seed: int) -> Random:
    return Random(f"{network}/{seed}/v{FIXTURE_VERSION}")


def pick_ts_ms(rng: Random) -> int:
    # Whole seconds, so backends storing second precision lose nothing.
    return rng.randrange(TS_MIN_MS // 1000, TS_MAX_MS // 1000) * 1000


def sentence(rng: Random, tags: list[str], n_words: int | None = None) -> str:
    words = rng.sample(PROSE_WORDS, n_words or rng.randint(5, 9))
    # Work one or two tag words into the prose so keyword searches bite.
    for tag in tags[: rng.randint(1, 2)] if tags else []:
        words.insert(rng.randrange(len(words) + 1), tag)
    return " ".join(words)


def pick_tags(rng: Random, k_min: int = 1, k_max: int = 4) -> list[str]:
    return rng.sample(TAG_WORDS, rng.randint(k_min, k_max))


def pick_place(rng: Random) -> tuple[str, str, str, str, str, float, float]:
    """A city with jittered coordinates (up to ~±16 km), 6-decimal rounded."""
    city, country, region, postal, street, lat, lon = rng.choice(CITIES)
    lat = round(lat + rng.uniform(-0.15, 0.15), 6)
    lon = round(lon + rng.uniform(-0.15, 0.15), 6)
    return city, country, region, postal, street, lat, lon


def full_name(rng: Random) -> tuple[str, str]:
    return rng.choice(FIRST_NAMES), rng.choice(LAST_NAMES)
