"""Batch pipeline turning venue records into ontology individuals.

Per-record emission is pure and deterministic; batch-level declarations
(city labels, the shared location-type individual) are emitted once per
run so the per-record triple count stays auditable. Rejected records
never contribute partial triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Callable, Iterable, Optional, Union

from gemforge.etl.categories import map_category
from gemforge.etl.records import GemRecord, RecordError
from gemforge.etl.slug import slugify
from gemforge.namespaces import (
    GEO_LAT,
    GEO_LONG,
    RDF_TYPE,
    RDFS_LABEL,
    XSD_DECIMAL,
    cg,
    resource,
)
from gemforge.ontology.location import LOCATION_TYPE_CLASS, LocationAssignment
from gemforge.ontology.model import OntologyModel, infer_types
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import Iri, Literal, Triple

VENUE_LOCATION_TYPE = resource("location-type/venue")
IN_CITY = cg("inCity")
DESCRIPTION = cg("description")
LINK = cg("link")

RecordStream = Iterable[
    Union[GemRecord, tuple[Optional[GemRecord], Optional[RecordError]]]
]


@dataclass
class EtlStats:
    """Counters for one batch run.

    records_in = accepted + records_rejected; resources_minted counts
    venue individuals only, not the shared city/location-type subjects.
    """

    records_in: int = 0
    records_rejected: int = 0
    triples_out: int = 0
    resources_minted: int = 0
    category_fallbacks: int = 0


def mint_iri(record: GemRecord) -> Iri:
    return resource(f"cultural-gems/{record.id}")


def city_iri(record: GemRecord) -> Iri:
    slug = slugify(record.city_name)
    return resource(f"city/{slug or record.city_id}")


def _degrees(value: float) -> Literal:
    # repr() is shortest-round-trip; format(..., "f") bars exponent
    # notation, which xsd:decimal lexical forms do not allow.
    return Literal(format(Decimal(repr(value)), "f"), XSD_DECIMAL)


def mapped_classes(record: GemRecord) -> tuple[list[Iri], int]:
    """Resolve all category codes, deduplicated, input order kept.

    Returns (classes, fallback_count); a record with only unknown codes
    still maps, to the hierarchy root, and a record with no codes at all
    gets one lookup so its OSM tags can still classify it.
    """
    tags = dict(record.osm_tags)
    classes: list[Iri] = []
    fallbacks = 0
    for code in record.categories or ("",):
        cls, fell_back = map_category(code, tags)
        fallbacks += int(fell_back)
        if cls not in classes:
            classes.append(cls)
    return classes, fallbacks


def record_to_triples(
    record: GemRecord,
    model: OntologyModel,
    stats: Optional[EtlStats] = None,
) -> Graph:
    """Emit the individual for one validated record.

    Rules, in emission order: one rdf:type per mapped class, rdfs:label,
    one description per language, one link triple per URL, geo lat/lon,
    city membership, and a location assignment (a single typed-location
    triple, or a time-indexed blank node when a validity interval is
    present). A minimal record therefore yields exactly 6 triples.
    """
    me = mint_iri(record)
    g = Graph()
    classes, fallbacks = mapped_classes(record)
    if stats is not None:
        stats.category_fallbacks += fallbacks
    for cls in classes:
        g.add(Triple(me, RDF_TYPE, cls))
    g.add(Triple(me, RDFS_LABEL, Literal(record.name)))
    for lang, text in record.descriptions:
        g.add(Triple(me, DESCRIPTION, Literal(text, lang=lang)))
    for url in record.links:
        g.add(Triple(me, LINK, Iri(url)))
    g.add(Triple(me, GEO_LAT, _degrees(record.lat)))
    g.add(Triple(me, GEO_LONG, _degrees(record.lon)))
    g.add(Triple(me, IN_CITY, city_iri(record)))
    interval = None
    if record.valid_from is not None or record.valid_to is not None:
        interval = (record.valid_from, record.valid_to)
    assignment = LocationAssignment(
        me, VENUE_LOCATION_TYPE, interval=interval
    )
    for t in assignment.triples(f"loc{record.id}"):
        g.add(t)
    return g


def run_etl(
    stream: RecordStream,
    model: OntologyModel,
    on_reject: Optional[Callable[[RecordError], None]] = None,
) -> tuple[Graph, EtlStats]:
    """Union the per-record graphs, add batch declarations, infer types.

    The stream yields GemRecord objects or (record, error) pairs as the
    readers produce them; errors and duplicate ids are rejected and
    counted, never partially emitted. Re-running on identical input
    yields an identical graph.
    """
    stats = EtlStats()
    out = Graph()
    seen_ids: set[int] = set()
    cities: dict[Iri, str] = {}

    def reject(err: RecordError) -> None:
        stats.records_rejected += 1
        if on_reject is not None:
            on_reject(err)

    for item in stream:
        record, err = (
            (item, None) if isinstance(item, GemRecord) else item
        )
        stats.records_in += 1
        if err is not None:
            reject(err)
            continue
        assert record is not None
        if record.id in seen_ids:
            reject(RecordError("duplicate-id", record.id))
            continue
        seen_ids.add(record.id)
        for t in record_to_triples(record, model, stats):
            out.add(t)
        cities[city_iri(record)] = record.city_name
        stats.resources_minted += 1

    if stats.resources_minted:
        g = out
        g.add(Triple(VENUE_LOCATION_TYPE, RDF_TYPE, LOCATION_TYPE_CLASS))
        g.add(Triple(VENUE_LOCATION_TYPE, RDFS_LABEL, Literal("Venue")))
        for iri, name in cities.items():
            g.add(Triple(iri, RDFS_LABEL, Literal(name)))
        out = infer_types(model, out)

    stats.triples_out = len(out)
    return out, stats
