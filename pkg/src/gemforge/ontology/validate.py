"""Data-quality checks for a single individual against the ontology.

Returns a report, never raises: the ETL and CLI decide what failing means.
"""

from __future__ import annotations

import datetime
from dataclasses import dataclass, field

from gemforge.namespaces import (
    GEO_LAT,
    GEO_LONG,
    RDF_TYPE,
    RESOURCE_NS,
)
from gemforge.ontology.location import AT_TIME_END, AT_TIME_START
from gemforge.ontology.model import OntologyModel
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import BlankNode, Iri, Literal


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


@dataclass
class ValidationReport:
    subject: Iri
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str) -> None:
        self.violations.append(Violation(code, message))


def _coordinate(report: ValidationReport, graph: Graph, subject, pred: Iri, lo, hi, name):
    for triple in graph.match(subject, pred, None):
        obj = triple.object
        if not isinstance(obj, Literal):
            report.add("coordinate-range", f"{name} is not a literal: {obj.n3()}")
            continue
        try:
            value = float(obj.lexical)
        except ValueError:
            report.add("coordinate-range", f"{name} is not numeric: {obj.lexical!r}")
            continue
        if not lo <= value <= hi:
            report.add("coordinate-range", f"{name} {value} outside [{lo}, {hi}]")


def _parse_date(lit: Literal):
    return datetime.date.fromisoformat(lit.lexical)


def validate_individual(
    model: OntologyModel, data: Graph, subject: Iri
) -> ValidationReport:
    report = ValidationReport(subject)

    types = [t.object for t in data.match(subject, RDF_TYPE, None)]
    if not types:
        report.add("no-type", "individual has no rdf:type")
    for cls in types:
        if not isinstance(cls, Iri) or cls not in model.classes:
            report.add("unknown-type", f"type {cls.n3()} is not in the ontology")

    _coordinate(report, data, subject, GEO_LAT, -90.0, 90.0, "latitude")
    _coordinate(report, data, subject, GEO_LONG, -180.0, 180.0, "longitude")

    # interval ordering on reified location nodes hanging off this subject
    for triple in data.match(subject, None, None):
        node = triple.object
        if not isinstance(node, BlankNode):
            continue
        start = data.value(node, AT_TIME_START)
        end = data.value(node, AT_TIME_END)
        if not isinstance(start, Literal) or not isinstance(end, Literal):
            continue
        try:
            start_d, end_d = _parse_date(start), _parse_date(end)
        except ValueError:
            report.add(
                "interval-order",
                f"unparseable interval bound on {node.n3()}: "
                f"{start.lexical!r}..{end.lexical!r}",
            )
            continue
        if end_d < start_d:
            report.add(
                "interval-order",
                f"interval end {end_d} before start {start_d} on {node.n3()}",
            )

    # objects minted in the resource namespace must resolve within the batch
    for triple in data.match(subject, None, None):
        obj = triple.object
        if not isinstance(obj, Iri):
            continue
        if not obj.value.startswith(RESOURCE_NS) or obj == subject:
            continue
        if not any(True for _ in data.match(obj, None, None)):
            report.add("dangling-object", f"{obj.n3()} has no triples of its own")

    return report
