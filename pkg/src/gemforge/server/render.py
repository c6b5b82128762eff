"""Query execution and body rendering shared by the CLI and the server.

Both front ends call execute_query and body_for with the same arguments,
which is what makes their outputs byte-identical for the same (query,
format) pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from gemforge.rdf.conneg import Format
from gemforge.rdf.graph import Graph
from gemforge.rdf.serialize import serialize
from gemforge.server import html as pages
from gemforge.sparql import (
    DescribeQuery,
    Query,
    SolutionSet,
    describe,
    evaluate_select,
    parse_query,
    serialize_sparql_json,
    serialize_sparql_xml,
)

# The query endpoint's output tokens. Which concrete format a token
# selects depends on whether the query produced a graph or a table.
OUTPUT_TOKENS = (
    "text/html",
    "text/rdf+n3",
    "application/xml",
    "application/json",
    "application/rdf+xml",
)

GRAPH_TOKEN_FORMATS: dict[str, Format] = {
    "text/html": Format.HTML,
    "text/rdf+n3": Format.TURTLE,
    "application/xml": Format.RDFXML,
    "application/json": Format.JSONLD,
    "application/rdf+xml": Format.RDFXML,
}

SELECT_TOKEN_FORMATS: dict[str, Format] = {
    "text/html": Format.HTML,
    "application/json": Format.SPARQL_JSON,
    "application/xml": Format.SPARQL_XML,
}


class FormatMismatch(ValueError):
    """The requested format cannot carry this result shape."""


@dataclass(frozen=True)
class QueryOutcome:
    query: Query
    graph: Optional[Graph] = None
    solutions: Optional[SolutionSet] = None


def execute_query(text: str, data: Graph) -> QueryOutcome:
    query = parse_query(text)
    if isinstance(query, DescribeQuery):
        return QueryOutcome(query=query, graph=describe(data, query.iri))
    return QueryOutcome(query=query, solutions=evaluate_select(query, data))


def format_for_token(token: str, outcome: QueryOutcome) -> Format:
    if token not in OUTPUT_TOKENS:
        raise FormatMismatch(
            f"unknown output format {token!r}; supported: {', '.join(OUTPUT_TOKENS)}"
        )
    table = GRAPH_TOKEN_FORMATS if outcome.graph is not None else SELECT_TOKEN_FORMATS
    fmt = table.get(token)
    if fmt is None:
        raise FormatMismatch(
            f"output {token!r} cannot carry SELECT results; supported: "
            + ", ".join(sorted(SELECT_TOKEN_FORMATS))
        )
    return fmt


def body_for(
    outcome: QueryOutcome,
    fmt: Format,
    resource_ns: str,
    ontology_ns: str,
) -> str:
    if outcome.graph is not None:
        if fmt == Format.HTML:
            assert isinstance(outcome.query, DescribeQuery)
            title = f"DESCRIBE <{outcome.query.iri.value}>"
            return pages.graph_page(
                title, outcome.graph, resource_ns, ontology_ns
            )
        if fmt in (Format.SPARQL_JSON, Format.SPARQL_XML):
            raise FormatMismatch(
                f"{fmt.value} cannot carry a graph result"
            )
        return serialize(outcome.graph, fmt)
    assert outcome.solutions is not None
    if fmt == Format.SPARQL_JSON:
        return serialize_sparql_json(outcome.solutions)
    if fmt == Format.SPARQL_XML:
        return serialize_sparql_xml(outcome.solutions)
    if fmt == Format.HTML:
        return pages.results_page(outcome.solutions, resource_ns, ontology_ns)
    raise FormatMismatch(
        f"{fmt.value} cannot carry SELECT results"
    )
