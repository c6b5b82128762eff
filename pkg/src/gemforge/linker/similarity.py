"""String and geodesic similarity metrics, all scoring into [0, 1].

Inputs to the string metrics are expected slug-normalized; the padding
character for trigrams is chosen outside the slug alphabet so padded and
unpadded characters never collide.
"""

from __future__ import annotations

import math

EARTH_RADIUS_M = 6_371_000.0
_PAD = "#"


def levenshtein(a: str, b: str) -> int:
    """Edit distance, two-row dynamic programming."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]


def levenshtein_sim(a: str, b: str) -> float:
    if not a and not b:
        return 1.0
    return 1.0 - levenshtein(a, b) / max(len(a), len(b))


def trigrams(s: str) -> frozenset[str]:
    padded = _PAD * 2 + s + _PAD * 2
    return frozenset(padded[i : i + 3] for i in range(len(padded) - 2))


def trigram_jaccard(a: str, b: str) -> float:
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    ta, tb = trigrams(a), trigrams(b)
    return len(ta & tb) / len(ta | tb)


def haversine_m(p1: tuple[float, float], p2: tuple[float, float]) -> float:
    """Great-circle distance in meters on the R=6,371,000 m sphere."""
    lat1, lon1 = map(math.radians, p1)
    lat2, lon2 = map(math.radians, p2)
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    h = (
        math.sin(dlat / 2.0) ** 2
        + math.cos(lat1) * math.cos(lat2) * math.sin(dlon / 2.0) ** 2
    )
    return 2.0 * EARTH_RADIUS_M * math.asin(math.sqrt(h))


def geo_sim(
    p1: tuple[float, float], p2: tuple[float, float], cutoff_m: float
) -> float:
    return max(0.0, 1.0 - haversine_m(p1, p2) / cutoff_m)
