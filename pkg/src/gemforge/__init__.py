"""Linked-open-data toolkit for a cultural-venues knowledge graph.

Subpackages: ``rdf`` (data model, parsers, serializers, content negotiation),
``ontology`` (class hierarchy, inference, validation), ``etl`` (venue records
to RDF), ``linker`` (owl:sameAs discovery), ``sparql`` (query subset),
``server`` (dereferenceable HTTP endpoints). The ``gemforge`` CLI fronts all
of them.
"""

__version__ = "1.0.0"
