"""Location assignments: where (and when) a cultural property is present.

A plain assignment is a single cg:locationType triple. One with a validity
interval is reified as a blank node typed a-loc:TimeIndexedTypeLocation
carrying the location type and the interval bounds.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass
from typing import Optional

from gemforge.namespaces import (
    ARCO_LOCATION_NS,
    ONTOLOGY_NS,
    RDF_TYPE,
    XSD_DATE,
)
from gemforge.rdf.terms import BlankNode, Iri, Literal, Triple

AT_LOCATION_TYPE = Iri(ARCO_LOCATION_NS + "atLocationType")
AT_TIME_START = Iri(ARCO_LOCATION_NS + "atTimeStart")
AT_TIME_END = Iri(ARCO_LOCATION_NS + "atTimeEnd")
TIME_INDEXED_TYPE_LOCATION = Iri(ARCO_LOCATION_NS + "TimeIndexedTypeLocation")
LOCATION_TYPE_CLASS = Iri(ARCO_LOCATION_NS + "LocationType")
LOCATION_TYPE_PROP = Iri(ONTOLOGY_NS + "locationType")
TIMED_LOCATION_PROP = Iri(ONTOLOGY_NS + "timedLocation")


@dataclass(frozen=True)
class LocationAssignment:
    subject: Iri
    location_type: Iri
    point: Optional[tuple[float, float]] = None
    interval: Optional[tuple[datetime.date, Optional[datetime.date]]] = None

    def __post_init__(self) -> None:
        if self.point is not None:
            lat, lon = self.point
            if not -90.0 <= lat <= 90.0:
                raise ValueError(f"latitude {lat} out of range")
            if not -180.0 <= lon <= 180.0:
                raise ValueError(f"longitude {lon} out of range")
        if self.interval is not None:
            start, end = self.interval
            if end is not None and end < start:
                raise ValueError(f"interval end {end} before start {start}")

    def triples(self, node_label: str) -> list[Triple]:
        """The interval form uses a fresh blank node named by the caller so
        batch output stays deterministic."""
        if self.interval is None:
            return [Triple(self.subject, LOCATION_TYPE_PROP, self.location_type)]
        start, end = self.interval
        node = BlankNode(node_label)
        out = [
            Triple(self.subject, TIMED_LOCATION_PROP, node),
            Triple(node, RDF_TYPE, TIME_INDEXED_TYPE_LOCATION),
            Triple(node, AT_LOCATION_TYPE, self.location_type),
            Triple(node, AT_TIME_START, Literal(start.isoformat(), XSD_DATE)),
        ]
        if end is not None:
            out.append(Triple(node, AT_TIME_END, Literal(end.isoformat(), XSD_DATE)))
        return out
