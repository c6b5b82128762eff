"""Query language subset: DESCRIBE and SELECT over basic graph patterns."""

from gemforge.sparql.ast import (
    COMPARISON_OPS,
    Comparison,
    DescribeQuery,
    Query,
    RegexFilter,
    SelectQuery,
    TriplePattern,
    Variable,
    format_query,
)
from gemforge.sparql.evaluate import SolutionSet, describe, evaluate_select, holds
from gemforge.sparql.parser import UNSUPPORTED_KEYWORDS, parse_query
from gemforge.sparql.results import serialize_sparql_json, serialize_sparql_xml

__all__ = [
    "COMPARISON_OPS",
    "Comparison",
    "DescribeQuery",
    "Query",
    "UNSUPPORTED_KEYWORDS",
    "RegexFilter",
    "SelectQuery",
    "SolutionSet",
    "TriplePattern",
    "Variable",
    "describe",
    "evaluate_select",
    "format_query",
    "holds",
    "parse_query",
    "serialize_sparql_json",
    "serialize_sparql_xml",
]
