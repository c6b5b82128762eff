"""The immutable snapshot handlers read, and the holder that swaps it.

A snapshot is built once from the configured files; every request reads
exactly one snapshot reference, so a concurrent reload never shows a
request half-old half-new data. Reload builds the replacement off to the
side and swaps a single attribute, which CPython makes atomic.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from gemforge.namespaces import OWL_SAMEAS, RDF_TYPE, RDFS_LABEL
from gemforge.ontology.model import (
    OntologyModel,
    load_ontology,
    resolve_imports,
    shipped_loader,
    shipped_ontology_text,
)
from gemforge.rdf.graph import Graph
from gemforge.rdf.ntriples import parse_ntriples
from gemforge.rdf.terms import Iri, Literal
from gemforge.rdf.turtle import parse_turtle
from gemforge.server.config import ServerConfig


def parse_rdf_file(path: str) -> Graph:
    """Parse by suffix: .nt as N-Triples, anything else as Turtle."""
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".nt"):
        return parse_ntriples(text)
    return parse_turtle(text)


@dataclass(frozen=True)
class Snapshot:
    config: ServerConfig
    data: Graph
    ontology_text: str
    ontology_graph: Graph
    model: OntologyModel

    def label_of(self, iri: Iri) -> Optional[str]:
        """Smallest label lexical, checking data first, then the ontology."""
        for graph in (self.data, self.ontology_graph):
            labels = sorted(
                t.object.lexical
                for t in graph.match(iri, RDFS_LABEL, None)
                if isinstance(t.object, Literal)
            )
            if labels:
                return labels[0]
        return None

    def types_of(self, iri: Iri) -> list[Iri]:
        return sorted(
            (
                t.object
                for t in self.data.match(iri, RDF_TYPE, None)
                if isinstance(t.object, Iri)
            ),
            key=lambda term: term.value,
        )

    def sameas_of(self, iri: Iri) -> list[Iri]:
        partners = {
            t.object
            for t in self.data.match(iri, OWL_SAMEAS, None)
            if isinstance(t.object, Iri)
        }
        partners |= {
            t.subject
            for t in self.data.match(None, OWL_SAMEAS, iri)
            if isinstance(t.subject, Iri)
        }
        partners.discard(iri)
        return sorted(partners, key=lambda term: term.value)

    def instance_count(self, cls: Iri) -> int:
        return len({t.subject for t in self.data.match(None, RDF_TYPE, cls)})


def build_snapshot(config: ServerConfig) -> Snapshot:
    if config.ontology_path is not None:
        ontology_text = Path(config.ontology_path).read_text(encoding="utf-8")
    else:
        ontology_text = shipped_ontology_text()
    ontology_graph = parse_turtle(ontology_text)
    model = resolve_imports(load_ontology(ontology_graph), shipped_loader)

    data = Graph()
    if config.data_path is not None:
        data.update(parse_rdf_file(config.data_path))
    if config.links_path is not None:
        data.update(parse_rdf_file(config.links_path))
    return Snapshot(
        config=config,
        data=data,
        ontology_text=ontology_text,
        ontology_graph=ontology_graph,
        model=model,
    )


class ServerState:
    """Mutable holder for the current snapshot."""

    def __init__(self, snapshot: Snapshot):
        self.snapshot = snapshot

    def reload(self) -> Snapshot:
        fresh = build_snapshot(self.snapshot.config)
        self.snapshot = fresh
        return fresh
