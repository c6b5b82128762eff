from gemforge.rdf.compare import isomorphic
from gemforge.rdf.conneg import (
    EXTENSIONS,
    FORMAT_BY_EXTENSION,
    MEDIA_TYPES,
    Format,
    NotAcceptable,
    negotiate,
    negotiate_media,
)
from gemforge.rdf.errors import ParseError
from gemforge.rdf.graph import Graph, GraphStore
from gemforge.rdf.ntriples import parse_ntriples
from gemforge.rdf.serialize import serialize
from gemforge.rdf.terms import BlankNode, Iri, Literal, Subject, Term, Triple
from gemforge.rdf.turtle import parse_turtle

__all__ = [
    "BlankNode",
    "EXTENSIONS",
    "FORMAT_BY_EXTENSION",
    "Format",
    "Graph",
    "GraphStore",
    "Iri",
    "Literal",
    "MEDIA_TYPES",
    "NotAcceptable",
    "ParseError",
    "Subject",
    "Term",
    "Triple",
    "isomorphic",
    "negotiate",
    "negotiate_media",
    "parse_ntriples",
    "parse_turtle",
    "serialize",
]
