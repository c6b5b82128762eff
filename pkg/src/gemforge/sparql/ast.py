"""Query AST for the supported subset, plus its canonical printer.

The printer and parser form a fixpoint: parsing the printed form of any
AST yields an equal AST, which keeps logging and caching keys stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from gemforge.rdf.terms import BlankNode, Iri, Literal, Term
from gemforge.namespaces import RDF_TYPE

COMPARISON_OPS = ("=", "!=", "<", ">")


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


TermOrVar = Union[Iri, Literal, BlankNode, Variable]


@dataclass(frozen=True)
class TriplePattern:
    subject: TermOrVar
    predicate: TermOrVar
    object: TermOrVar

    def variables(self) -> list[Variable]:
        return [
            part
            for part in (self.subject, self.predicate, self.object)
            if isinstance(part, Variable)
        ]


@dataclass(frozen=True)
class Comparison:
    var: Variable
    op: str
    value: Term


@dataclass(frozen=True)
class RegexFilter:
    var: Variable
    pattern: str
    ignore_case: bool = False


Filter = Union[Comparison, RegexFilter]


@dataclass(frozen=True)
class SelectQuery:
    variables: tuple[Variable, ...]  # empty means SELECT *
    patterns: tuple[TriplePattern, ...]
    filters: tuple[Filter, ...] = ()
    distinct: bool = False
    limit: Optional[int] = None
    offset: int = 0

    def projected(self) -> tuple[Variable, ...]:
        """The output variables; a star projects every pattern variable
        in first-appearance order."""
        if self.variables:
            return self.variables
        seen: list[Variable] = []
        for pattern in self.patterns:
            for var in pattern.variables():
                if var not in seen:
                    seen.append(var)
        return tuple(seen)


@dataclass(frozen=True)
class DescribeQuery:
    iri: Iri


Query = Union[SelectQuery, DescribeQuery]


def _term_text(part: TermOrVar) -> str:
    if isinstance(part, Variable):
        return str(part)
    if isinstance(part, Iri) and part == RDF_TYPE:
        return "a"
    return part.n3()


def format_query(query: Query) -> str:
    """Canonical single-spaced text for the AST, prefix-free."""
    if isinstance(query, DescribeQuery):
        return f"DESCRIBE <{query.iri.value}>"
    head = "SELECT"
    if query.distinct:
        head += " DISTINCT"
    if query.variables:
        head += " " + " ".join(str(v) for v in query.variables)
    else:
        head += " *"
    body = []
    for pattern in query.patterns:
        body.append(
            " ".join(
                (
                    _term_text(pattern.subject),
                    _term_text(pattern.predicate),
                    _term_text(pattern.object),
                )
            )
            + " ."
        )
    for flt in query.filters:
        if isinstance(flt, Comparison):
            body.append(f"FILTER({flt.var} {flt.op} {flt.value.n3()})")
        else:
            args = [str(flt.var), Literal(flt.pattern).n3()]
            if flt.ignore_case:
                args.append(Literal("i").n3())
            body.append(f"FILTER(regex({', '.join(args)}))")
    text = f"{head} WHERE {{ {' '.join(body)} }}"
    if query.limit is not None:
        text += f" LIMIT {query.limit}"
    if query.offset:
        text += f" OFFSET {query.offset}"
    return text
