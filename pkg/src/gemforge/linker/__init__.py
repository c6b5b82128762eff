"""Link discovery: similarity scoring, blocking, owl:sameAs emission."""

from gemforge.linker.blocking import block
from gemforge.linker.discover import (
    ACCEPT,
    REJECT,
    REVIEW,
    LinkCandidate,
    dedupe_accepts,
    discover_links,
    emit_sameas,
    review_csv,
    score_pair,
)
from gemforge.linker.entities import LinkEntity, entities_from_graph
from gemforge.linker.similarity import (
    EARTH_RADIUS_M,
    geo_sim,
    haversine_m,
    levenshtein,
    levenshtein_sim,
    trigram_jaccard,
    trigrams,
)
from gemforge.linker.spec import (
    Blocking,
    DEFAULT_METRICS,
    LinkSpec,
    SpecError,
    load_spec,
    spec_from_mapping,
)

__all__ = [
    "ACCEPT",
    "Blocking",
    "DEFAULT_METRICS",
    "EARTH_RADIUS_M",
    "LinkCandidate",
    "LinkEntity",
    "LinkSpec",
    "REJECT",
    "REVIEW",
    "SpecError",
    "block",
    "dedupe_accepts",
    "discover_links",
    "emit_sameas",
    "entities_from_graph",
    "geo_sim",
    "haversine_m",
    "levenshtein",
    "levenshtein_sim",
    "load_spec",
    "review_csv",
    "score_pair",
    "spec_from_mapping",
    "trigram_jaccard",
    "trigrams",
]
