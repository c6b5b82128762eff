"""Ontology loading, imports resolution and subclass reasoning.

The model is immutable once built (safe to share across request handlers) and
carries a precomputed reflexive-transitive superclass closure, so type
inference and subclass tests are dictionary lookups.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from gemforge.namespaces import (
    OWL_ANNOTATION_PROPERTY,
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_IMPORTS,
    OWL_OBJECT_PROPERTY,
    RDF_TYPE,
    RDFS_CLASS,
    RDFS_DOMAIN,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
)
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import Iri, Triple
from gemforge.rdf.turtle import parse_turtle

_CLASS_TYPES = (OWL_CLASS, RDFS_CLASS)
_PROPERTY_TYPES = (OWL_OBJECT_PROPERTY, OWL_DATATYPE_PROPERTY, OWL_ANNOTATION_PROPERTY)


class SubclassCycleError(ValueError):
    """The subclass graph is not a DAG; carries one witnessing cycle."""

    def __init__(self, cycle: list[Iri]):
        path = " -> ".join(c.value for c in cycle)
        super().__init__(f"subclass cycle: {path}")
        self.cycle = cycle


@dataclass(frozen=True)
class PropertyDecl:
    iri: Iri
    kind: Iri
    domain: Optional[Iri] = None
    range: Optional[Iri] = None


@dataclass(frozen=True)
class OntologyModel:
    classes: frozenset[Iri]
    subclass_edges: frozenset[tuple[Iri, Iri]]
    properties: Mapping[Iri, PropertyDecl]
    imports: frozenset[Iri]
    annotations: Graph
    unresolved_imports: frozenset[Iri] = frozenset()
    closure: Mapping[Iri, frozenset[Iri]] = field(default_factory=dict, compare=False)

    def superclasses(self, cls: Iri) -> frozenset[Iri]:
        """Reflexive-transitive superclass set; unknown class -> just itself."""
        return self.closure.get(cls, frozenset([cls]))

    def direct_children(self, cls: Iri) -> list[Iri]:
        return sorted(
            (child for child, parent in self.subclass_edges if parent == cls),
            key=lambda c: c.value,
        )

    def direct_parents(self, cls: Iri) -> list[Iri]:
        return sorted(
            (parent for child, parent in self.subclass_edges if child == cls),
            key=lambda c: c.value,
        )


def _check_acyclic(classes: frozenset[Iri], edges: frozenset[tuple[Iri, Iri]]) -> None:
    parents: dict[Iri, list[Iri]] = {}
    for child, parent in edges:
        parents.setdefault(child, []).append(parent)

    WHITE, GREY, BLACK = 0, 1, 2
    color = {c: WHITE for c in classes}
    stack_path: list[Iri] = []

    def visit(node: Iri) -> None:
        color[node] = GREY
        stack_path.append(node)
        for parent in parents.get(node, []):
            if color.get(parent, WHITE) == GREY:
                cycle_start = stack_path.index(parent)
                raise SubclassCycleError(stack_path[cycle_start:] + [parent])
            if color.get(parent, WHITE) == WHITE:
                visit(parent)
        stack_path.pop()
        color[node] = BLACK

    for cls in sorted(classes, key=lambda c: c.value):
        if color[cls] == WHITE:
            visit(cls)


def _build_closure(
    classes: frozenset[Iri], edges: frozenset[tuple[Iri, Iri]]
) -> dict[Iri, frozenset[Iri]]:
    parents: dict[Iri, set[Iri]] = {c: set() for c in classes}
    for child, parent in edges:
        parents[child].add(parent)

    closure: dict[Iri, frozenset[Iri]] = {}

    def ancestors(node: Iri) -> frozenset[Iri]:
        cached = closure.get(node)
        if cached is not None:
            return cached
        result = {node}
        for parent in parents.get(node, ()):
            result |= ancestors(parent)
        frozen = frozenset(result)
        closure[node] = frozen
        return frozen

    for cls in classes:
        ancestors(cls)
    return closure


def _assemble(
    classes: set[Iri],
    edges: set[tuple[Iri, Iri]],
    properties: dict[Iri, PropertyDecl],
    imports: set[Iri],
    annotations: Graph,
    unresolved: frozenset[Iri] = frozenset(),
) -> OntologyModel:
    # subclass usage implies class-ness, so undeclared endpoints join the set
    for child, parent in edges:
        classes.add(child)
        classes.add(parent)
    frozen_classes = frozenset(classes)
    frozen_edges = frozenset(edges)
    _check_acyclic(frozen_classes, frozen_edges)
    return OntologyModel(
        classes=frozen_classes,
        subclass_edges=frozen_edges,
        properties=dict(properties),
        imports=frozenset(imports),
        annotations=annotations,
        unresolved_imports=unresolved,
        closure=_build_closure(frozen_classes, frozen_edges),
    )


def load_ontology(graph: Graph) -> OntologyModel:
    classes: set[Iri] = set()
    edges: set[tuple[Iri, Iri]] = set()
    properties: dict[Iri, PropertyDecl] = {}
    imports: set[Iri] = set()
    annotations = Graph()
    annotations.prefixes.update(graph.prefixes)

    prop_kinds: dict[Iri, Iri] = {}
    for triple in graph.match(None, RDF_TYPE, None):
        if triple.object in _PROPERTY_TYPES and isinstance(triple.subject, Iri):
            prop_kinds[triple.subject] = triple.object

    for triple in graph.match(None, None, None):
        s, p, o = triple.subject, triple.predicate, triple.object
        if p == RDF_TYPE and o in _CLASS_TYPES and isinstance(s, Iri):
            classes.add(s)
        elif p == RDFS_SUBCLASSOF and isinstance(s, Iri) and isinstance(o, Iri):
            edges.add((s, o))
        elif p == RDF_TYPE and o in _PROPERTY_TYPES:
            pass  # captured via prop_kinds
        elif p == RDFS_DOMAIN and isinstance(s, Iri) and s in prop_kinds and isinstance(o, Iri):
            pass  # folded into PropertyDecl below
        elif p == RDFS_RANGE and isinstance(s, Iri) and s in prop_kinds and isinstance(o, Iri):
            pass
        elif p == OWL_IMPORTS and isinstance(o, Iri):
            imports.add(o)
        else:
            annotations.add(triple)

    for prop, kind in prop_kinds.items():
        domain = graph.value(prop, RDFS_DOMAIN)
        range_ = graph.value(prop, RDFS_RANGE)
        properties[prop] = PropertyDecl(
            iri=prop,
            kind=kind,
            domain=domain if isinstance(domain, Iri) else None,
            range=range_ if isinstance(range_, Iri) else None,
        )

    return _assemble(classes, edges, properties, imports, annotations)


def resolve_imports(
    model: OntologyModel, loader: Callable[[Iri], Optional[Graph]]
) -> OntologyModel:
    """Transitively merge every reachable import into one model.

    Unresolvable IRIs are recorded on the result rather than failing; a
    cyclic import chain terminates through the visited set.
    """
    classes = set(model.classes)
    edges = set(model.subclass_edges)
    properties = dict(model.properties)
    imports = set(model.imports)
    annotations = Graph()
    annotations.update(model.annotations)

    visited: set[Iri] = set()
    unresolved: set[Iri] = set(model.unresolved_imports)
    queue = sorted(model.imports, key=lambda i: i.value)

    while queue:
        target = queue.pop(0)
        if target in visited:
            continue
        visited.add(target)
        loaded = loader(target)
        if loaded is None:
            unresolved.add(target)
            continue
        sub = load_ontology(loaded)
        classes |= sub.classes
        edges |= sub.subclass_edges
        for iri, decl in sub.properties.items():
            properties.setdefault(iri, decl)
        imports |= sub.imports
        annotations.update(sub.annotations)
        queue.extend(sorted(sub.imports - visited, key=lambda i: i.value))

    return _assemble(
        classes, edges, properties, imports, annotations, frozenset(unresolved)
    )


def is_subclass_of(model: OntologyModel, a: Iri, b: Iri) -> bool:
    return b in model.superclasses(a)


def infer_types(model: OntologyModel, data: Graph) -> Graph:
    """Materialize superclass types; never removes, adds only rdf:type."""
    out = Graph()
    out.update(data)
    for triple in list(data.match(None, RDF_TYPE, None)):
        if not isinstance(triple.object, Iri):
            continue
        for ancestor in model.superclasses(triple.object):
            out.add(Triple(triple.subject, RDF_TYPE, ancestor))
    return out


# -- shipped files -----------------------------------------------------------

CORE_ONTOLOGY_IRI = Iri("https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/")
LOCATION_STUB_IRI = Iri("https://w3id.org/arco/ontology/location/")

_SHIPPED_FILES: dict[Iri, str] = {
    CORE_ONTOLOGY_IRI: "cultural-gems.ttl",
    LOCATION_STUB_IRI: "arco-location.ttl",
}


def shipped_ontology_text(name: str = "cultural-gems.ttl") -> str:
    root = importlib.resources.files("gemforge.ontology") / "data" / name
    return root.read_text(encoding="utf-8")


def shipped_loader(iri: Iri) -> Optional[Graph]:
    name = _SHIPPED_FILES.get(iri)
    if name is None:
        return None
    return parse_turtle(shipped_ontology_text(name))


def load_shipped_ontology(resolve: bool = True) -> OntologyModel:
    model = load_ontology(parse_turtle(shipped_ontology_text()))
    if resolve:
        model = resolve_imports(model, shipped_loader)
    return model


def load_ontology_file(path: str, resolve: bool = True) -> OntologyModel:
    """Load an ontology Turtle file; imports resolve against shipped stubs
    first, then against sibling files named by the import IRI's last segment."""
    import pathlib

    text = pathlib.Path(path).read_text(encoding="utf-8")
    model = load_ontology(parse_turtle(text))
    if not resolve:
        return model

    directory = pathlib.Path(path).parent

    def loader(iri: Iri) -> Optional[Graph]:
        shipped = shipped_loader(iri)
        if shipped is not None:
            return shipped
        stem = iri.value.rstrip("/").rsplit("/", 1)[-1]
        candidate = directory / f"{stem}.ttl"
        if candidate.exists():
            return parse_turtle(candidate.read_text(encoding="utf-8"))
        return None

    return resolve_imports(model, loader)
