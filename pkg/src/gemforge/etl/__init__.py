"""Batch ETL: raw venue records in, ontology individuals out."""

from gemforge.etl.categories import (
    APP_CATEGORIES,
    FALLBACK_CLASS,
    OSM_TAGS,
    map_category,
)
from gemforge.etl.pipeline import (
    EtlStats,
    VENUE_LOCATION_TYPE,
    city_iri,
    mint_iri,
    record_to_triples,
    run_etl,
)
from gemforge.etl.records import (
    CSV_HEADER,
    GemRecord,
    RecordError,
    read_records,
    record_from_csv_row,
    record_from_json,
    sniff_format,
)
from gemforge.etl.slug import slugify

__all__ = [
    "APP_CATEGORIES",
    "CSV_HEADER",
    "EtlStats",
    "FALLBACK_CLASS",
    "GemRecord",
    "OSM_TAGS",
    "RecordError",
    "VENUE_LOCATION_TYPE",
    "city_iri",
    "map_category",
    "mint_iri",
    "read_records",
    "record_from_csv_row",
    "record_from_json",
    "record_to_triples",
    "run_etl",
    "slugify",
    "sniff_format",
]
