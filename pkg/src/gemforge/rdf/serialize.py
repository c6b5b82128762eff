"""Serializers: N-Triples, Turtle, RDF/XML, JSON-LD.

All four are deterministic (sorted output) so serving the same snapshot twice
yields byte-identical bodies. RDF/XML and JSON-LD are write-only formats here;
RDF/XML uses the flat rdf:Description form, JSON-LD the flat expanded form
with an @context assembled from the graph's prefix map.
"""

from __future__ import annotations

import json
import re
from typing import Union
from xml.sax.saxutils import escape, quoteattr

from gemforge.rdf.conneg import Format
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import (
    RDF_LANGSTRING,
    RDF_NS,
    RDF_TYPE,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    _escape_literal,
)

_SAFE_LOCAL = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.\-]*$")
_NCNAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")
_XML_OK = re.compile(
    r"^[\x09\x0A\x0D\x20-\uD7FF\uE000-\uFFFD\U00010000-\U0010FFFF]*$"
)


def serialize(graph: Graph, format: Format) -> str:
    if format == Format.NTRIPLES:
        return serialize_ntriples(graph)
    if format == Format.TURTLE:
        return serialize_turtle(graph)
    if format == Format.RDFXML:
        return serialize_rdfxml(graph)
    if format == Format.JSONLD:
        return serialize_jsonld(graph)
    raise ValueError(f"{format} is not an RDF serialization format")


# -- N-Triples --------------------------------------------------------------


def serialize_ntriples(graph: Graph) -> str:
    lines = [t.n3() + "\n" for t in graph.sorted_triples()]
    return "".join(lines)


# -- Turtle -----------------------------------------------------------------


def _turtle_term(term: Term, prefixes: dict[str, Iri]) -> str:
    if isinstance(term, Iri):
        best = None
        for prefix, ns in prefixes.items():
            if not term.value.startswith(ns.value):
                continue
            local = term.value[len(ns.value) :]
            if local and not _SAFE_LOCAL.match(local):
                continue
            if local.endswith("."):
                continue
            if best is None or len(ns.value) > len(best[1].value):
                best = (prefix, ns, local)
        if best is not None:
            return f"{best[0]}:{best[2]}"
        return term.n3()
    if isinstance(term, Literal) and term.datatype not in (XSD_STRING, RDF_LANGSTRING):
        dt = _turtle_term(term.datatype, prefixes)
        if not dt.startswith("<"):
            return f'"{_escape_literal(term.lexical)}"^^{dt}'
    return term.n3()


def serialize_turtle(graph: Graph) -> str:
    out = []
    for prefix in sorted(graph.prefixes):
        out.append(f"@prefix {prefix}: {graph.prefixes[prefix].n3()} .\n")
    if out:
        out.append("\n")

    by_subject: dict[str, list] = {}
    subjects = {}
    for triple in graph.sorted_triples():
        key = triple.subject.n3()
        subjects[key] = triple.subject
        by_subject.setdefault(key, []).append(triple)

    def verb(p: Iri) -> str:
        return "a" if p == RDF_TYPE else _turtle_term(p, graph.prefixes)

    for key in sorted(by_subject):
        triples = by_subject[key]
        # rdf:type first, then predicate order; objects keep sorted order
        triples.sort(
            key=lambda t: (t.predicate != RDF_TYPE, t.predicate.n3(), t.object.n3())
        )
        grouped: list[tuple[str, list[str]]] = []
        for t in triples:
            v = verb(t.predicate)
            o = _turtle_term(t.object, graph.prefixes)
            if grouped and grouped[-1][0] == v:
                grouped[-1][1].append(o)
            else:
                grouped.append((v, [o]))
        subject_text = _turtle_term(subjects[key], graph.prefixes)
        lines = [f"{subject_text} {grouped[0][0]} {', '.join(grouped[0][1])}"]
        for v, objs in grouped[1:]:
            lines.append(f"    {v} {', '.join(objs)}")
        out.append(" ;\n".join(lines) + " .\n")
    return "".join(out)


# -- RDF/XML ----------------------------------------------------------------


def _split_for_xml(iri: Iri) -> tuple[str, str]:
    """Split an IRI into (namespace, NCName local part) for element names."""
    value = iri.value
    cut = len(value)
    while cut > 0 and (value[cut - 1].isalnum() or value[cut - 1] in "_.-"):
        cut -= 1
    local = value[cut:]
    while local and not _NCNAME.match(local):
        cut += 1
        local = value[cut:]
    if not local or cut == 0:
        raise ValueError(f"cannot derive an XML element name from predicate {value!r}")
    return value[:cut], local


def _xml_check(text: str, role: str) -> str:
    if not _XML_OK.match(text):
        raise ValueError(f"{role} contains characters not representable in XML")
    return text


def serialize_rdfxml(graph: Graph) -> str:
    namespaces: dict[str, str] = {RDF_NS: "rdf"}
    reverse_prefixes = {ns.value: p for p, ns in graph.prefixes.items()}
    counter = 0

    def ns_prefix(ns: str) -> str:
        nonlocal counter
        if ns in namespaces:
            return namespaces[ns]
        declared = reverse_prefixes.get(ns)
        if declared and declared not in namespaces.values() and _NCNAME.match(declared):
            namespaces[ns] = declared
        else:
            counter += 1
            namespaces[ns] = f"ns{counter}"
        return namespaces[ns]

    by_subject: dict[str, list] = {}
    subjects = {}
    for triple in graph.sorted_triples():
        key = triple.subject.n3()
        subjects[key] = triple.subject
        by_subject.setdefault(key, []).append(triple)

    body = []
    for key in sorted(by_subject):
        subject = subjects[key]
        if isinstance(subject, Iri):
            about = f"rdf:about={quoteattr(_xml_check(subject.value, 'IRI'))}"
        else:
            about = f"rdf:nodeID={quoteattr(subject.label)}"
        body.append(f"  <rdf:Description {about}>\n")
        for t in by_subject[key]:
            ns, local = _split_for_xml(t.predicate)
            tag = f"{ns_prefix(ns)}:{local}"
            obj = t.object
            if isinstance(obj, Iri):
                body.append(
                    f"    <{tag} rdf:resource={quoteattr(_xml_check(obj.value, 'IRI'))}/>\n"
                )
            elif isinstance(obj, BlankNode):
                body.append(f"    <{tag} rdf:nodeID={quoteattr(obj.label)}/>\n")
            else:
                text = escape(_xml_check(obj.lexical, "literal"))
                if obj.lang is not None:
                    attr = f" xml:lang={quoteattr(obj.lang)}"
                elif obj.datatype != XSD_STRING:
                    attr = f" rdf:datatype={quoteattr(_xml_check(obj.datatype.value, 'IRI'))}"
                else:
                    attr = ""
                body.append(f"    <{tag}{attr}>{text}</{tag}>\n")
        body.append("  </rdf:Description>\n")

    decls = "".join(
        f'\n    xmlns:{prefix}="{escape(ns)}"'
        for ns, prefix in sorted(namespaces.items(), key=lambda kv: kv[1])
    )
    return (
        '<?xml version="1.0" encoding="utf-8"?>\n'
        f"<rdf:RDF{decls}>\n" + "".join(body) + "</rdf:RDF>\n"
    )


# -- JSON-LD ----------------------------------------------------------------


def _jsonld_value(term: Term) -> Union[dict, str]:
    if isinstance(term, Iri):
        return {"@id": term.value}
    if isinstance(term, BlankNode):
        return {"@id": f"_:{term.label}"}
    if term.lang is not None:
        return {"@value": term.lexical, "@language": term.lang}
    if term.datatype != XSD_STRING:
        return {"@value": term.lexical, "@type": term.datatype.value}
    return {"@value": term.lexical}


def serialize_jsonld(graph: Graph) -> str:
    nodes: dict[str, dict] = {}
    for triple in graph.sorted_triples():
        subject = triple.subject
        sid = subject.value if isinstance(subject, Iri) else f"_:{subject.label}"
        node = nodes.setdefault(sid, {"@id": sid})
        if triple.predicate == RDF_TYPE and not isinstance(triple.object, Literal):
            obj = triple.object
            tid = obj.value if isinstance(obj, Iri) else f"_:{obj.label}"
            node.setdefault("@type", [])
            if tid not in node["@type"]:
                node["@type"].append(tid)
        else:
            node.setdefault(triple.predicate.value, []).append(
                _jsonld_value(triple.object)
            )

    ordered = []
    for sid in sorted(nodes):
        node = nodes[sid]
        entry = {"@id": node["@id"]}
        if "@type" in node:
            entry["@type"] = sorted(node["@type"])
        for key in sorted(k for k in node if not k.startswith("@")):
            entry[key] = sorted(node[key], key=lambda v: json.dumps(v, sort_keys=True))
        ordered.append(entry)

    doc: dict = {}
    if graph.prefixes:
        doc["@context"] = {p: graph.prefixes[p].value for p in sorted(graph.prefixes)}
    doc["@graph"] = ordered
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
