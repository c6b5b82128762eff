"""Resource-name slugs: lowercase, accents stripped, spaces to dashes."""

from __future__ import annotations

import re
import unicodedata

_WS_RUN = re.compile(r"\s+")
_DROP = re.compile(r"[^a-z0-9-]")
_DASH_RUN = re.compile(r"-{2,}")


def slugify(name: str) -> str:
    decomposed = unicodedata.normalize("NFKD", name)
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    lowered = stripped.lower()
    dashed = _WS_RUN.sub("-", lowered)
    cleaned = _DROP.sub("", dashed)
    collapsed = _DASH_RUN.sub("-", cleaned)
    return collapsed.strip("-")
