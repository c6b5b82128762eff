"""Triple set with subject/predicate/object indexes and snapshot store."""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from gemforge.rdf.terms import BlankNode, Iri, Subject, Term, Triple


class Graph:
    """An in-memory RDF graph.

    Triples live in a set (duplicate inserts are no-ops) mirrored by three
    indexes keyed on subject, predicate and object. ``match`` consults the
    most selective index for the bound positions of a pattern.
    """

    __slots__ = ("_triples", "_by_s", "_by_p", "_by_o", "prefixes")

    def __init__(
        self,
        triples: Iterable[Triple] = (),
        prefixes: Optional[dict[str, Iri]] = None,
    ) -> None:
        self._triples: set[Triple] = set()
        self._by_s: dict[Subject, set[Triple]] = {}
        self._by_p: dict[Iri, set[Triple]] = {}
        self._by_o: dict[Term, set[Triple]] = {}
        self.prefixes: dict[str, Iri] = dict(prefixes or {})
        for t in triples:
            self.add(t)

    def add(self, triple: Triple) -> bool:
        """Insert a triple; returns False when it was already present."""
        if not isinstance(triple, Triple):
            raise TypeError("Graph.add expects a Triple")
        if triple in self._triples:
            return False
        self._triples.add(triple)
        self._by_s.setdefault(triple.subject, set()).add(triple)
        self._by_p.setdefault(triple.predicate, set()).add(triple)
        self._by_o.setdefault(triple.object, set()).add(triple)
        return True

    def update(self, other: "Graph | Iterable[Triple]") -> None:
        if isinstance(other, Graph):
            for prefix, ns in other.prefixes.items():
                self.prefixes.setdefault(prefix, ns)
            triples: Iterable[Triple] = other._triples
        else:
            triples = other
        for t in triples:
            self.add(t)

    def copy(self) -> "Graph":
        g = Graph(prefixes=self.prefixes)
        g.update(self)
        return g

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:  # identity hash; graphs are mutable
        return id(self)

    def match(
        self,
        s: Optional[Subject] = None,
        p: Optional[Iri] = None,
        o: Optional[Term] = None,
    ) -> list[Triple]:
        """All triples agreeing with every bound position of (s, p, o)."""
        candidate_sets = []
        if s is not None:
            candidate_sets.append(self._by_s.get(s, set()))
        if p is not None:
            candidate_sets.append(self._by_p.get(p, set()))
        if o is not None:
            candidate_sets.append(self._by_o.get(o, set()))
        if not candidate_sets:
            return list(self._triples)
        base = min(candidate_sets, key=len)
        out = []
        for t in base:
            if s is not None and t.subject != s:
                continue
            if p is not None and t.predicate != p:
                continue
            if o is not None and t.object != o:
                continue
            out.append(t)
        return out

    def count(
        self,
        s: Optional[Subject] = None,
        p: Optional[Iri] = None,
        o: Optional[Term] = None,
    ) -> int:
        if s is None and p is None and o is None:
            return len(self._triples)
        return len(self.match(s, p, o))

    def subjects(self) -> set[Subject]:
        return set(self._by_s)

    def objects(self, s: Subject, p: Iri) -> list[Term]:
        return [t.object for t in self.match(s=s, p=p)]

    def value(self, s: Subject, p: Iri) -> Optional[Term]:
        """First object of (s, p, ?) in canonical order, or None."""
        objs = self.objects(s, p)
        if not objs:
            return None
        return min(objs, key=lambda t: t.n3())

    def sorted_triples(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.sort_key)

    def blank_nodes(self) -> set[BlankNode]:
        nodes: set[BlankNode] = set()
        for t in self._triples:
            if isinstance(t.subject, BlankNode):
                nodes.add(t.subject)
            if isinstance(t.object, BlankNode):
                nodes.add(t.object)
        return nodes

    def __repr__(self) -> str:
        return f"<Graph {len(self._triples)} triples>"


class GraphStore:
    """Snapshot holder for serving: readers grab ``current`` and keep using
    that object; ``swap`` installs a new graph atomically (plain attribute
    assignment, safe under the GIL). No reader observes a partial load.
    """

    def __init__(self, graph: Graph) -> None:
        self._graph = graph

    @property
    def current(self) -> Graph:
        return self._graph

    def swap(self, graph: Graph) -> None:
        if not isinstance(graph, Graph):
            raise TypeError("GraphStore.swap expects a Graph")
        self._graph = graph
