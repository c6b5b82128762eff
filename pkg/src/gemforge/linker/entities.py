"""Linkable entity extraction from RDF graphs.

An entity is any IRI subject carrying a label or a coordinate pair; the
link metrics tolerate either field missing and score 0 for it. The slug
of the lexicographically smallest label keeps extraction deterministic
when a resource has several labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from gemforge.etl.slug import slugify
from gemforge.namespaces import GEO_LAT, GEO_LONG, RDFS_LABEL
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import Iri, Literal


@dataclass(frozen=True)
class LinkEntity:
    iri: Iri
    slug: str
    lat: Optional[float]
    lon: Optional[float]


def _coordinate(graph: Graph, subject: Iri, predicate: Iri) -> Optional[float]:
    values = []
    for t in graph.match(subject, predicate, None):
        if isinstance(t.object, Literal):
            try:
                values.append(float(t.object.lexical))
            except ValueError:
                continue
    return min(values) if values else None


def entities_from_graph(graph: Graph) -> list[LinkEntity]:
    subjects = sorted(
        {t.subject for t in graph if isinstance(t.subject, Iri)},
        key=lambda s: s.value,
    )
    out = []
    for subject in subjects:
        labels = sorted(
            t.object.lexical
            for t in graph.match(subject, RDFS_LABEL, None)
            if isinstance(t.object, Literal)
        )
        lat = _coordinate(graph, subject, GEO_LAT)
        lon = _coordinate(graph, subject, GEO_LONG)
        if not labels and lat is None and lon is None:
            continue
        out.append(
            LinkEntity(
                iri=subject,
                slug=slugify(labels[0]) if labels else "",
                lat=lat,
                lon=lon,
            )
        )
    return out
