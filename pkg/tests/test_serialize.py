import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gemforge.rdf.compare import isomorphic
from gemforge.rdf.conneg import Format
from gemforge.rdf.graph import Graph
from gemforge.rdf.ntriples import parse_ntriples
from gemforge.rdf.serialize import serialize
from gemforge.rdf.terms import BlankNode, Iri, Literal, Triple
from gemforge.rdf.turtle import parse_turtle

from oracles import random_graph, read_jsonld, read_rdfxml


def test_empty_graph_ntriples_is_empty_string():
    assert serialize(Graph(), Format.NTRIPLES) == ""


def test_one_triple_ntriples_exact_bytes():
    g = Graph()
    g.add(Triple(Iri("http://e/a"), Iri("http://e/p"), Iri("http://e/b")))
    assert serialize(g, Format.NTRIPLES) == "<http://e/a> <http://e/p> <http://e/b> .\n"


def test_ntriples_sorted_lexicographically():
    g = random_graph(seed=9, size=40)
    lines = serialize(g, Format.NTRIPLES).splitlines()
    assert lines == sorted(lines)


def test_serialize_rejects_non_rdf_formats():
    for fmt in (Format.SPARQL_JSON, Format.SPARQL_XML, Format.HTML):
        with pytest.raises(ValueError):
            serialize(Graph(), fmt)


def test_deterministic_output_all_formats():
    g = random_graph(seed=21, size=35)
    for fmt in (Format.TURTLE, Format.NTRIPLES, Format.RDFXML, Format.JSONLD):
        assert serialize(g, fmt) == serialize(g, fmt)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_roundtrip_every_format_random_graphs(seed):
    """parse(serialize(G, f)) isomorphic to G for all four syntaxes.

    RDF/XML and JSON-LD are read back by independent stdlib-based readers,
    not by anything in the package.
    """
    g = random_graph(seed=seed, size=50, max_blank_nodes=8)
    assert isomorphic(g, parse_turtle(serialize(g, Format.TURTLE)))
    assert isomorphic(g, parse_ntriples(serialize(g, Format.NTRIPLES)))
    assert isomorphic(g, read_rdfxml(serialize(g, Format.RDFXML)))
    assert isomorphic(g, read_jsonld(serialize(g, Format.JSONLD)))


def test_turtle_abbreviates_known_prefixes():
    g = parse_turtle(
        "@prefix cg: <https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/> .\n"
        "cg:a cg:p cg:b ."
    )
    out = serialize(g, Format.TURTLE)
    assert "cg:a cg:p cg:b ." in out
    assert "@prefix cg:" in out


def test_turtle_uses_a_for_rdf_type():
    g = parse_turtle("@prefix ex: <http://e/> . ex:x a ex:C .")
    assert " a ex:C" in serialize(g, Format.TURTLE)


def test_rdfxml_unsplittable_predicate_raises():
    # trailing slash leaves no local part; all-digit tail can't start an
    # element name
    for bad in (Iri("http://e/p/"), Iri("http://e/123")):
        g = Graph()
        g.add(Triple(Iri("http://e/s"), bad, Literal("x")))
        with pytest.raises(ValueError, match="element name"):
            serialize(g, Format.RDFXML)


def test_rdfxml_control_char_literal_raises():
    g = Graph()
    g.add(Triple(Iri("http://e/s"), Iri("http://e/p"), Literal("bad\x01")))
    with pytest.raises(ValueError, match="XML"):
        serialize(g, Format.RDFXML)


def test_rdfxml_reference_reader_sees_language_and_datatype():
    g = Graph()
    s = Iri("http://e/s")
    g.add(Triple(s, Iri("http://e/name"), Literal("fado", lang="pt")))
    g.add(
        Triple(
            s,
            Iri("http://e/count"),
            Literal("3", Iri("http://www.w3.org/2001/XMLSchema#integer")),
        )
    )
    back = read_rdfxml(serialize(g, Format.RDFXML))
    assert set(back.match(None, None, None)) == set(g.match(None, None, None))


def test_jsonld_has_context_from_prefixes():
    g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b .")
    doc = json.loads(serialize(g, Format.JSONLD))
    assert doc["@context"]["ex"] == "http://e/"
    assert isinstance(doc["@graph"], list)


def test_jsonld_types_use_type_keyword():
    g = parse_turtle("@prefix ex: <http://e/> . ex:a a ex:C, ex:D .")
    doc = json.loads(serialize(g, Format.JSONLD))
    (node,) = doc["@graph"]
    assert sorted(node["@type"]) == ["http://e/C", "http://e/D"]


def test_blank_nodes_roundtrip_with_renaming():
    g = parse_turtle(
        "@prefix ex: <http://e/> .\n"
        "ex:a ex:p [ ex:q [ ex:r \"deep\" ] ] .\n"
        "_:top ex:s ex:a .\n"
    )
    for fmt, reader in (
        (Format.TURTLE, parse_turtle),
        (Format.NTRIPLES, parse_ntriples),
        (Format.RDFXML, read_rdfxml),
        (Format.JSONLD, read_jsonld),
    ):
        assert isomorphic(g, reader(serialize(g, fmt))), fmt
