"""SELECT result serialization in the W3C results formats.

Output is deterministic down to the byte: key order, indentation, and
attribute order are fixed, because the HTTP layer and the CLI promise
identical bodies for identical queries.
"""

from __future__ import annotations

import json
from xml.sax.saxutils import escape, quoteattr

from gemforge.rdf.terms import (
    RDF_LANGSTRING,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
)
from gemforge.sparql.evaluate import SolutionSet

RESULTS_NS = "http://www.w3.org/2005/sparql-results#"


def _json_term(term: Term) -> dict:
    if isinstance(term, Iri):
        return {"type": "uri", "value": term.value}
    if isinstance(term, BlankNode):
        return {"type": "bnode", "value": term.label}
    assert isinstance(term, Literal)
    out: dict = {"type": "literal", "value": term.lexical}
    if term.lang is not None:
        out["xml:lang"] = term.lang
    elif term.datatype not in (XSD_STRING, RDF_LANGSTRING):
        out["datatype"] = term.datatype.value
    return out


def serialize_sparql_json(solutions: SolutionSet) -> str:
    document = {
        "head": {"vars": list(solutions.variables)},
        "results": {
            "bindings": [
                {
                    name: _json_term(row[name])
                    for name in solutions.variables
                    if name in row
                }
                for row in solutions.rows
            ]
        },
    }
    return json.dumps(document, separators=(",", ":"), ensure_ascii=False)


def _xml_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<uri>{escape(term.value)}</uri>"
    if isinstance(term, BlankNode):
        return f"<bnode>{escape(term.label)}</bnode>"
    assert isinstance(term, Literal)
    attrs = ""
    if term.lang is not None:
        attrs = f" xml:lang={quoteattr(term.lang)}"
    elif term.datatype not in (XSD_STRING, RDF_LANGSTRING):
        attrs = f" datatype={quoteattr(term.datatype.value)}"
    return f"<literal{attrs}>{escape(term.lexical)}</literal>"


def serialize_sparql_xml(solutions: SolutionSet) -> str:
    lines = [
        '<?xml version="1.0"?>',
        f'<sparql xmlns="{RESULTS_NS}">',
        "  <head>",
    ]
    for name in solutions.variables:
        lines.append(f"    <variable name={quoteattr(name)}/>")
    lines.append("  </head>")
    lines.append("  <results>")
    for row in solutions.rows:
        lines.append("    <result>")
        for name in solutions.variables:
            if name in row:
                lines.append(
                    f"      <binding name={quoteattr(name)}>"
                    f"{_xml_term(row[name])}</binding>"
                )
        lines.append("    </result>")
    lines.append("  </results>")
    lines.append("</sparql>")
    return "\n".join(lines) + "\n"
