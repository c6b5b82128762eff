"""BGP evaluation over a graph snapshot, and the DESCRIBE subgraph.

Filter semantics, mirrored by the test oracle, so fixed here: numbers
(integer, decimal, double, float datatypes) compare numerically, other
literal pairs compare by codepoint on the lexical form for < and >,
equality is term equality outside the numeric case, and any type error
(IRI ordering, unparseable numeric lexical) drops the row. regex
searches a literal's lexical form or an IRI's text; blank nodes fail.

DESCRIBE is fixed as CBD plus inverse arcs: the subject's triples, the
full closure over blank nodes reached as objects, and every triple
pointing at the IRI, so browsers can walk links in both directions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from gemforge.namespaces import XSD_NS
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import BlankNode, Iri, Literal, Term, Triple
from gemforge.sparql.ast import (
    Comparison,
    Filter,
    RegexFilter,
    SelectQuery,
    TriplePattern,
    Variable,
)

Binding = dict[str, Term]

_NUMERIC_DATATYPES = frozenset(
    Iri(XSD_NS + local) for local in ("integer", "decimal", "double", "float")
)


@dataclass
class SolutionSet:
    variables: tuple[str, ...]
    rows: list[Binding] = field(default_factory=list)


def _as_number(term: Term) -> Optional[float]:
    if not isinstance(term, Literal) or term.datatype not in _NUMERIC_DATATYPES:
        return None
    try:
        return float(term.lexical)
    except ValueError:
        return None


def holds(flt: Filter, binding: Binding) -> bool:
    """One filter against one row; errors behave as false."""
    term = binding.get(flt.var.name)
    if term is None:
        return False
    if isinstance(flt, RegexFilter):
        if isinstance(term, Literal):
            text = term.lexical
        elif isinstance(term, Iri):
            text = term.value
        else:
            return False
        flags = re.IGNORECASE if flt.ignore_case else 0
        return re.search(flt.pattern, text, flags) is not None
    left_num = _as_number(term)
    right_num = _as_number(flt.value)
    if flt.op in ("=", "!="):
        if left_num is not None and right_num is not None:
            equal = left_num == right_num
        else:
            equal = term == flt.value
        return equal if flt.op == "=" else not equal
    if left_num is not None and right_num is not None:
        return left_num < right_num if flt.op == "<" else left_num > right_num
    if isinstance(term, Literal) and isinstance(flt.value, Literal):
        if flt.op == "<":
            return term.lexical < flt.value.lexical
        return term.lexical > flt.value.lexical
    return False


def _resolve(part, binding: Binding):
    if isinstance(part, Variable):
        return binding.get(part.name)
    return part


def _unify(pattern: TriplePattern, triple: Triple, binding: Binding) -> Optional[Binding]:
    out = binding
    for part, value in (
        (pattern.subject, triple.subject),
        (pattern.predicate, triple.predicate),
        (pattern.object, triple.object),
    ):
        if isinstance(part, Variable):
            bound = out.get(part.name)
            if bound is None:
                if out is binding:
                    out = dict(binding)
                out[part.name] = value
            elif bound != value:
                return None
        elif part != value:
            return None
    return out if out is not binding else dict(binding)


def _selectivity(pattern: TriplePattern, graph: Graph) -> int:
    def const(part):
        return None if isinstance(part, Variable) else part

    return sum(
        1
        for _ in graph.match(
            const(pattern.subject), const(pattern.predicate), const(pattern.object)
        )
    )


def sort_key(row: Binding, variables: tuple[str, ...]):
    return tuple(row[v].n3() if v in row else "" for v in variables)


def evaluate_select(query: SelectQuery, graph: Graph) -> SolutionSet:
    """Join the patterns most-selective-first, then filter, project,
    deduplicate, order, and page."""
    ordered = sorted(query.patterns, key=lambda p: _selectivity(p, graph))
    rows: list[Binding] = [{}]
    for pattern in ordered:
        matched: list[Binding] = []
        for binding in rows:
            s = _resolve(pattern.subject, binding)
            p = _resolve(pattern.predicate, binding)
            o = _resolve(pattern.object, binding)
            for triple in graph.match(s, p, o):
                extended = _unify(pattern, triple, binding)
                if extended is not None:
                    matched.append(extended)
        rows = matched
        if not rows:
            break
    rows = [
        row for row in rows if all(holds(flt, row) for flt in query.filters)
    ]
    names = tuple(v.name for v in query.projected())
    projected = [
        {name: row[name] for name in names if name in row} for row in rows
    ]
    if query.distinct:
        seen = set()
        unique = []
        for row in projected:
            key = sort_key(row, names)
            if key not in seen:
                seen.add(key)
                unique.append(row)
        projected = unique
    projected.sort(key=lambda row: sort_key(row, names))
    if query.offset:
        projected = projected[query.offset :]
    if query.limit is not None:
        projected = projected[: query.limit]
    return SolutionSet(variables=names, rows=projected)


def describe(graph: Graph, iri: Iri) -> Graph:
    out = Graph()
    visited: set[Union[Iri, BlankNode]] = set()
    stack: list[Union[Iri, BlankNode]] = [iri]
    while stack:
        node = stack.pop()
        if node in visited:
            continue
        visited.add(node)
        for triple in graph.match(node, None, None):
            out.add(triple)
            obj = triple.object
            if isinstance(obj, BlankNode) and obj not in visited:
                stack.append(obj)
    for triple in graph.match(None, None, iri):
        out.add(triple)
    return out
