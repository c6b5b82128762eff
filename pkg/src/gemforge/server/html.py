"""HTML page builders: resource pages, class pages, the query form.

Pure string functions, no framework types. Every outbound IRI object of
a resource's description is rendered as an anchor; IRIs under the two
project namespaces link to the local route, everything else links out.
"""

from __future__ import annotations

import html
from typing import Optional, Sequence

from gemforge.namespaces import RDF_TYPE
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import BlankNode, Iri, Literal, Term
from gemforge.sparql.evaluate import SolutionSet

_STYLE = """
body { font-family: system-ui, sans-serif; margin: 2rem auto; max-width: 60rem;
       padding: 0 1rem; color: #222; }
h1 { margin-bottom: 0.2rem; }
.iri { color: #666; font-size: 0.85rem; word-break: break-all; }
table { border-collapse: collapse; width: 100%; margin: 1rem 0; }
th, td { border: 1px solid #ccc; padding: 0.4rem 0.6rem; text-align: left;
         vertical-align: top; word-break: break-all; }
th { background: #f0f0f0; }
.lit { color: #054; }
.bnode { color: #850; font-style: italic; }
textarea { width: 100%; font-family: monospace; }
.error { color: #a00; }
footer { margin-top: 2rem; color: #888; font-size: 0.8rem; }
"""


def _page(title: str, body: str) -> str:
    return (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n<head>\n<meta charset="utf-8">\n'
        f"<title>{html.escape(title)}</title>\n"
        f"<style>{_STYLE}</style>\n</head>\n<body>\n"
        f"{body}\n"
        "<footer>Cultural gems linked data service</footer>\n"
        "</body>\n</html>\n"
    )


def href_for(iri: Iri, resource_ns: str, ontology_ns: str) -> str:
    if iri.value.startswith(resource_ns):
        return "/resource/" + iri.value[len(resource_ns) :]
    if iri.value.startswith(ontology_ns):
        return "/ontology/cultural-gems/" + iri.value[len(ontology_ns) :]
    return iri.value


def _term_html(term: Term, resource_ns: str, ontology_ns: str) -> str:
    if isinstance(term, Iri):
        target = html.escape(href_for(term, resource_ns, ontology_ns), quote=True)
        return f'<a href="{target}">{html.escape(term.value)}</a>'
    if isinstance(term, BlankNode):
        return f'<span class="bnode">_:{html.escape(term.label)}</span>'
    assert isinstance(term, Literal)
    text = html.escape(term.lexical)
    if term.lang:
        return f'<span class="lit">{text}</span> <small>@{html.escape(term.lang)}</small>'
    return f'<span class="lit">{text}</span>'


def _triple_rows(
    triples, resource_ns: str, ontology_ns: str, columns: int = 3
) -> str:
    rows = []
    for t in triples:
        cells = [t.subject, t.predicate, t.object][3 - columns :]
        rendered = "".join(
            f"<td>{_term_html(term, resource_ns, ontology_ns)}</td>"
            for term in cells
        )
        rows.append(f"<tr>{rendered}</tr>")
    return "\n".join(rows)


def resource_page(
    iri: Iri,
    label: Optional[str],
    description: Graph,
    sameas: Sequence[Iri],
    resource_ns: str,
    ontology_ns: str,
) -> str:
    own = sorted(
        (t for t in description if t.subject == iri),
        key=lambda t: (t.predicate.value, t.object.n3()),
    )
    nested = sorted(
        (t for t in description if isinstance(t.subject, BlankNode)),
        key=lambda t: t.n3(),
    )
    inverse = sorted(
        (t for t in description if t.object == iri and t.subject != iri),
        key=lambda t: t.n3(),
    )
    types = [t.object for t in own if t.predicate == RDF_TYPE]

    parts = [f"<h1>{html.escape(label or iri.value.rsplit('/', 1)[-1])}</h1>"]
    parts.append(f'<p class="iri">{html.escape(iri.value)}</p>')
    if types:
        rendered = ", ".join(
            _term_html(t, resource_ns, ontology_ns) for t in types
        )
        parts.append(f"<p>Type: {rendered}</p>")
    parts.append("<h2>Properties</h2>")
    parts.append(
        '<table><tr><th>Property</th><th>Value</th></tr>\n'
        + _triple_rows(own, resource_ns, ontology_ns, columns=2)
        + "</table>"
    )
    if nested:
        parts.append("<h2>Nested nodes</h2>")
        parts.append(
            "<table><tr><th>Node</th><th>Property</th><th>Value</th></tr>\n"
            + _triple_rows(nested, resource_ns, ontology_ns, columns=3)
            + "</table>"
        )
    parts.append("<h2>Referenced by</h2>")
    if inverse:
        parts.append(
            "<table><tr><th>Subject</th><th>Property</th><th>Value</th></tr>\n"
            + _triple_rows(inverse, resource_ns, ontology_ns, columns=3)
            + "</table>"
        )
    else:
        parts.append("<p>No inbound links.</p>")
    parts.append("<h2>Same as</h2>")
    if sameas:
        items = "".join(
            f"<li>{_term_html(p, resource_ns, ontology_ns)}</li>" for p in sameas
        )
        parts.append(f"<ul>{items}</ul>")
    else:
        parts.append("<p>No equivalent resources linked.</p>")
    return _page(label or iri.value, "\n".join(parts))


def class_page(
    iri: Iri,
    label: Optional[str],
    comment: Optional[str],
    superclasses: Sequence[Iri],
    subclasses: Sequence[Iri],
    instance_count: int,
    resource_ns: str,
    ontology_ns: str,
) -> str:
    name = label or iri.value.rsplit("/", 1)[-1]
    parts = [f"<h1>{html.escape(name)}</h1>"]
    parts.append(f'<p class="iri">{html.escape(iri.value)}</p>')
    if comment:
        parts.append(f"<p>{html.escape(comment)}</p>")
    parts.append(f"<p>Instances in the loaded data: {instance_count}</p>")
    for title, classes in (
        ("Superclasses", superclasses),
        ("Subclasses", subclasses),
    ):
        parts.append(f"<h2>{title}</h2>")
        if classes:
            items = "".join(
                f"<li>{_term_html(c, resource_ns, ontology_ns)}</li>"
                for c in classes
            )
            parts.append(f"<ul>{items}</ul>")
        else:
            parts.append("<p>None.</p>")
    return _page(name, "\n".join(parts))


def property_page(
    iri: Iri,
    label: Optional[str],
    triples,
    resource_ns: str,
    ontology_ns: str,
) -> str:
    name = label or iri.value.rsplit("/", 1)[-1]
    body = (
        f"<h1>{html.escape(name)}</h1>"
        f'<p class="iri">{html.escape(iri.value)}</p>'
        "<h2>Declaration</h2>"
        '<table><tr><th>Property</th><th>Value</th></tr>\n'
        + _triple_rows(
            sorted(triples, key=lambda t: t.n3()),
            resource_ns,
            ontology_ns,
            columns=2,
        )
        + "</table>"
    )
    return _page(name, body)


def ontology_index(
    classes: Sequence[tuple[Iri, Optional[str]]],
    resource_ns: str,
    ontology_ns: str,
) -> str:
    rows = "\n".join(
        f"<tr><td>{_term_html(iri, resource_ns, ontology_ns)}</td>"
        f"<td>{html.escape(label or '')}</td></tr>"
        for iri, label in classes
    )
    body = (
        "<h1>Cultural gems ontology</h1>"
        f"<p>{len(classes)} classes in the core namespace.</p>"
        "<table><tr><th>Class</th><th>Label</th></tr>\n" + rows + "</table>"
    )
    return _page("Cultural gems ontology", body)


def graph_page(title: str, graph: Graph, resource_ns: str, ontology_ns: str) -> str:
    triples = sorted(graph, key=lambda t: t.n3())
    body = (
        f"<h1>{html.escape(title)}</h1>"
        f"<p>{graph.count()} triples</p>"
        "<table><tr><th>Subject</th><th>Predicate</th><th>Object</th></tr>\n"
        + _triple_rows(triples, resource_ns, ontology_ns, columns=3)
        + "</table>"
    )
    return _page(title, body)


def results_table(solutions: SolutionSet, resource_ns: str, ontology_ns: str) -> str:
    header = "".join(f"<th>?{html.escape(v)}</th>" for v in solutions.variables)
    rows = []
    for row in solutions.rows:
        cells = "".join(
            "<td>"
            + (
                _term_html(row[v], resource_ns, ontology_ns)
                if v in row
                else ""
            )
            + "</td>"
            for v in solutions.variables
        )
        rows.append(f"<tr>{cells}</tr>")
    return (
        f"<p>{len(solutions.rows)} solutions</p>"
        f"<table><tr>{header}</tr>\n" + "\n".join(rows) + "</table>"
    )


def results_page(solutions: SolutionSet, resource_ns: str, ontology_ns: str) -> str:
    return _page(
        "SPARQL results", results_table(solutions, resource_ns, ontology_ns)
    )


def sparql_page(
    query_text: str,
    result_html: str = "",
    error: Optional[str] = None,
) -> str:
    body = [
        "<h1>SPARQL</h1>",
        '<form method="get" action="/sparql">',
        f'<textarea name="query" rows="8">{html.escape(query_text)}</textarea>',
        '<p><label>Output: <select name="output">',
        '<option value="text/html">text/html</option>',
        '<option value="application/json">application/json</option>',
        '<option value="application/xml">application/xml</option>',
        '<option value="application/rdf+xml">application/rdf+xml</option>',
        '<option value="text/rdf+n3">text/rdf+n3</option>',
        "</select></label> ",
        '<button type="submit">Run</button></p>',
        "</form>",
    ]
    if error:
        body.append(f'<p class="error">{html.escape(error)}</p>')
    if result_html:
        body.append(result_html)
    return _page("SPARQL", "\n".join(body))


def error_page(status: int, message: str) -> str:
    return _page(
        f"{status}",
        f"<h1>{status}</h1><p>{html.escape(message)}</p>",
    )
