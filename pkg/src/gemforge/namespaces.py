"""Well-known vocabularies and the two project namespaces."""

from __future__ import annotations

from gemforge.rdf.terms import (  # noqa: F401  (re-exported constants)
    RDF_NS,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    XSD_NS,
    XSD_STRING,
    Iri,
)

RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
GEO_NS = "http://www.w3.org/2003/01/geo/wgs84_pos#"

# Ontology definition namespace and resource (data) namespace.
ONTOLOGY_NS = "https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/"
RESOURCE_NS = "https://culturalgems.jrc.ec.europa.eu/resource/"

# Reused external ontology namespaces (declared locally, imported as stubs).
ARCO_NS = "https://w3id.org/arco/ontology/arco/"
ARCO_LOCATION_NS = "https://w3id.org/arco/ontology/location/"
ARCO_EVENT_NS = "https://w3id.org/arco/ontology/cultural-event/"
OPLA_NS = "http://ontologydesignpatterns.org/opla#"

RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_COMMENT = Iri(RDFS_NS + "comment")
RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
RDFS_DOMAIN = Iri(RDFS_NS + "domain")
RDFS_RANGE = Iri(RDFS_NS + "range")
RDFS_CLASS = Iri(RDFS_NS + "Class")

OWL_CLASS = Iri(OWL_NS + "Class")
OWL_ONTOLOGY = Iri(OWL_NS + "Ontology")
OWL_IMPORTS = Iri(OWL_NS + "imports")
OWL_SAMEAS = Iri(OWL_NS + "sameAs")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")
OWL_ANNOTATION_PROPERTY = Iri(OWL_NS + "AnnotationProperty")

XSD_DATE = Iri(XSD_NS + "date")

GEO_LAT = Iri(GEO_NS + "lat")
GEO_LONG = Iri(GEO_NS + "long")

# Common prefix block used by the ETL output and fixtures.
STANDARD_PREFIXES: dict[str, Iri] = {
    "rdf": Iri(RDF_NS),
    "rdfs": Iri(RDFS_NS),
    "owl": Iri(OWL_NS),
    "xsd": Iri(XSD_NS),
    "geo": Iri(GEO_NS),
    "cg": Iri(ONTOLOGY_NS),
    "cgr": Iri(RESOURCE_NS),
    "arco": Iri(ARCO_NS),
    "a-loc": Iri(ARCO_LOCATION_NS),
    "a-ce": Iri(ARCO_EVENT_NS),
}


def cg(local: str) -> Iri:
    """A class or property IRI in the Cultural gems ontology namespace."""
    return Iri(ONTOLOGY_NS + local)


def resource(local: str) -> Iri:
    """An individual IRI in the resource namespace."""
    return Iri(RESOURCE_NS + local)
