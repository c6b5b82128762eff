"""Content negotiation over the formats the stack serves.

Accept headers are parsed per RFC 9110: media ranges with q-values, wildcards
matched by specificity (exact > type/* > */*). Unparseable ranges are dropped
rather than failing the request; a header with no parseable range at all falls
back to the context default, while a parseable header matching nothing
supported raises NotAcceptable.
"""

from __future__ import annotations

import enum
from typing import Mapping, Optional, Sequence


class Format(enum.Enum):
    TURTLE = "turtle"
    NTRIPLES = "ntriples"
    RDFXML = "rdfxml"
    JSONLD = "jsonld"
    SPARQL_JSON = "sparql-json"
    SPARQL_XML = "sparql-xml"
    HTML = "html"


# Canonical media type per format, used for Content-Type when the client did
# not name an alias explicitly.
MEDIA_TYPES: dict[Format, str] = {
    Format.TURTLE: "text/turtle",
    Format.NTRIPLES: "application/n-triples",
    Format.RDFXML: "application/rdf+xml",
    Format.JSONLD: "application/ld+json",
    Format.SPARQL_JSON: "application/json",
    Format.SPARQL_XML: "application/xml",
    Format.HTML: "text/html",
}

# URL extension <-> format, for /resource/{id}.{ext} variants.
EXTENSIONS: dict[Format, str] = {
    Format.TURTLE: "ttl",
    Format.NTRIPLES: "nt",
    Format.RDFXML: "rdf",
    Format.JSONLD: "json",
    Format.HTML: "html",
}
FORMAT_BY_EXTENSION: dict[str, Format] = {v: k for k, v in EXTENSIONS.items()}

# What `application/xml` / `application/json` mean depends on what is being
# served: RDF aliases on resource and ontology URIs, SPARQL result formats on
# the query endpoint. Each table maps acceptable media type -> format.
RESOURCE_MEDIA: dict[str, Format] = {
    "text/turtle": Format.TURTLE,
    "text/rdf+n3": Format.TURTLE,  # legacy alias
    "application/n-triples": Format.NTRIPLES,
    "application/rdf+xml": Format.RDFXML,
    "application/xml": Format.RDFXML,
    "application/ld+json": Format.JSONLD,
    "application/json": Format.JSONLD,
    "text/html": Format.HTML,
}

SELECT_MEDIA: dict[str, Format] = {
    "application/json": Format.SPARQL_JSON,
    "application/sparql-results+json": Format.SPARQL_JSON,
    "application/xml": Format.SPARQL_XML,
    "application/sparql-results+xml": Format.SPARQL_XML,
    "text/html": Format.HTML,
}

# Server-side tie break, most preferred first.
PREFERENCE: tuple[Format, ...] = (
    Format.TURTLE,
    Format.RDFXML,
    Format.JSONLD,
    Format.NTRIPLES,
    Format.SPARQL_JSON,
    Format.SPARQL_XML,
    Format.HTML,
)


class NotAcceptable(Exception):
    """No supported media type matches the Accept header with q > 0."""

    def __init__(self, accept_header: str):
        super().__init__(f"no acceptable format for {accept_header!r}")
        self.accept_header = accept_header


def _parse_ranges(accept_header: str) -> list[tuple[str, str, float]]:
    """Return (type, subtype, q) per parseable media range, in header order."""
    ranges = []
    for part in accept_header.split(","):
        part = part.strip()
        if not part:
            continue
        pieces = part.split(";")
        media = pieces[0].strip().lower()
        if media.count("/") != 1:
            continue
        mtype, subtype = media.split("/")
        mtype, subtype = mtype.strip(), subtype.strip()
        if not mtype or not subtype:
            continue
        if mtype == "*" and subtype != "*":
            continue
        q = 1.0
        bad = False
        for param in pieces[1:]:
            if "=" not in param:
                continue
            key, _, value = param.partition("=")
            if key.strip().lower() == "q":
                try:
                    q = float(value.strip())
                except ValueError:
                    bad = True
                    break
                if not 0.0 <= q <= 1.0:
                    bad = True
                    break
        if bad:
            continue
        ranges.append((mtype, subtype, q))
    return ranges


def _best_match(media: str, ranges: Sequence[tuple[str, str, float]]) -> Optional[tuple[float, int]]:
    """(q, specificity) of the most specific range matching `media`, or None.

    Specificity: 2 exact, 1 type wildcard subtype, 0 full wildcard. Among
    equally specific ranges the highest q wins.
    """
    mtype, subtype = media.split("/")
    best: Optional[tuple[float, int]] = None
    for rtype, rsub, q in ranges:
        if rtype == mtype and rsub == subtype:
            spec = 2
        elif rtype == mtype and rsub == "*":
            spec = 1
        elif rtype == "*" and rsub == "*":
            spec = 0
        else:
            continue
        if best is None or spec > best[1] or (spec == best[1] and q > best[0]):
            best = (q, spec)
    return best


def negotiate_media(
    accept_header: str,
    table: Mapping[str, Format],
    default: Format,
) -> tuple[Format, str]:
    """Pick (format, media type for Content-Type) for an Accept header.

    The returned media type is what the client matched, so an alias like
    `application/xml` is echoed back rather than silently rewritten.
    """
    ranges = _parse_ranges(accept_header)
    if not ranges:
        return default, _canonical_of(default, table)

    # q=0 on a format's canonical type refuses the format outright; a
    # wildcard must not resurrect it under a legacy alias.
    refused = set()
    for media, fmt in table.items():
        if MEDIA_TYPES[fmt] != media:
            continue
        hit = _best_match(media, ranges)
        if hit is not None and hit[0] == 0.0:
            refused.add(fmt)

    scored: dict[Format, tuple[float, int, int, str]] = {}
    for media, fmt in table.items():
        if fmt in refused:
            continue
        hit = _best_match(media, ranges)
        if hit is None or hit[0] <= 0.0:
            continue
        q, spec = hit
        canonical = 1 if MEDIA_TYPES[fmt] == media else 0
        candidate = (q, spec, canonical, media)
        if fmt not in scored or candidate[:3] > scored[fmt][:3]:
            scored[fmt] = candidate

    if not scored:
        raise NotAcceptable(accept_header)

    best_q = max(entry[0] for entry in scored.values())
    in_contention = [fmt for fmt, entry in scored.items() if entry[0] == best_q]
    for fmt in PREFERENCE:
        if fmt in in_contention:
            return fmt, scored[fmt][3]
    # table contained a format missing from PREFERENCE; deterministic fallback
    fmt = sorted(in_contention, key=lambda f: f.value)[0]
    return fmt, scored[fmt][3]


def _canonical_of(fmt: Format, table: Mapping[str, Format]) -> str:
    canonical = MEDIA_TYPES[fmt]
    if table.get(canonical) == fmt:
        return canonical
    for media, f in table.items():
        if f == fmt:
            return media
    return canonical


def negotiate(accept_header: str) -> Format:
    """Resource-context negotiation: RDF syntaxes plus HTML, default HTML."""
    fmt, _ = negotiate_media(accept_header, RESOURCE_MEDIA, Format.HTML)
    return fmt
