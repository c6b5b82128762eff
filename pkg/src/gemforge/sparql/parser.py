"""Recursive-descent parser for the supported query subset.

Recognized: PREFIX declarations, DESCRIBE <iri>, and SELECT [DISTINCT]
over one basic graph pattern with FILTER comparisons or regex, LIMIT and
OFFSET. Every other SPARQL form fails fast with an error naming the
keyword, so callers can distinguish "malformed" from "out of scope".

Regex patterns are restricted to a conservative subset: backreferences
and (?...) group constructs are rejected at parse time.
"""

from __future__ import annotations

import re
from typing import Optional

from gemforge.namespaces import (
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
)
from gemforge.rdf.errors import ParseError
from gemforge.rdf.terms import Iri, Literal
from gemforge.sparql.ast import (
    COMPARISON_OPS,
    Comparison,
    DescribeQuery,
    Query,
    RegexFilter,
    SelectQuery,
    TriplePattern,
    Variable,
)

UNSUPPORTED_KEYWORDS = frozenset(
    {
        "ASK",
        "CONSTRUCT",
        "INSERT",
        "DELETE",
        "LOAD",
        "CLEAR",
        "CREATE",
        "DROP",
        "COPY",
        "MOVE",
        "ADD",
        "WITH",
        "OPTIONAL",
        "UNION",
        "MINUS",
        "GRAPH",
        "SERVICE",
        "BIND",
        "VALUES",
        "EXISTS",
        "FROM",
        "NAMED",
        "ORDER",
        "GROUP",
        "HAVING",
        "REDUCED",
        "BASE",
        "COUNT",
        "SUM",
        "AVG",
        "MIN",
        "MAX",
        "SAMPLE",
        "GROUP_CONCAT",
    }
)

_SUPPORTED_KEYWORDS = frozenset(
    {
        "PREFIX",
        "SELECT",
        "DISTINCT",
        "WHERE",
        "FILTER",
        "REGEX",
        "LIMIT",
        "OFFSET",
        "DESCRIBE",
        "A",
        "TRUE",
        "FALSE",
    }
)

_IRIREF = re.compile(r'<([^<>"{}|^`\\\x00-\x20]*)>')
_VAR = re.compile(r"[?$]([A-Za-z_][A-Za-z0-9_]*)")
_PNAME = re.compile(r"([A-Za-z][A-Za-z0-9_\-]*)?:([A-Za-z0-9_][A-Za-z0-9_\-.]*)?")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"[0-9]+(\.[0-9]+)?([eE][+-]?[0-9]+)?")
_LANGTAG = re.compile(r"@([A-Za-z]{1,8}(?:-[A-Za-z0-9]{1,8})*)")
_STRING_ESCAPES = {
    "t": "\t",
    "n": "\n",
    "r": "\r",
    "b": "\b",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


class _Token:
    __slots__ = ("kind", "value", "line", "column", "extra")

    def __init__(self, kind: str, value, line: int, column: int, extra=None):
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column
        self.extra = extra


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.column)

    def _advance(self, count: int) -> None:
        chunk = self.text[self.pos : self.pos + count]
        newlines = chunk.count("\n")
        if newlines:
            self.line += newlines
            self.column = count - chunk.rfind("\n")
        else:
            self.column += count
        self.pos += count

    def _skip_space(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n":
                self._advance(1)
            elif ch == "#":
                end = self.text.find("\n", self.pos)
                self._advance((end if end != -1 else len(self.text)) - self.pos)
            else:
                return

    def tokens(self) -> list[_Token]:
        out = []
        while True:
            token = self._next()
            out.append(token)
            if token.kind == "EOF":
                return out

    def _next(self) -> _Token:
        self._skip_space()
        line, column = self.line, self.column
        if self.pos >= len(self.text):
            return _Token("EOF", None, line, column)
        ch = self.text[self.pos]

        if ch == "<":
            match = _IRIREF.match(self.text, self.pos)
            if match:
                self._advance(match.end() - self.pos)
                return _Token("IRIREF", match.group(1), line, column)
            self._advance(1)
            return _Token("OP", "<", line, column)
        if ch == "!":
            if self.text.startswith("!=", self.pos):
                self._advance(2)
                return _Token("OP", "!=", line, column)
            raise self.error("expected != ")
        if ch in "=>":
            self._advance(1)
            return _Token("OP", ch, line, column)
        if ch in "{}().,;*":
            self._advance(1)
            return _Token(ch, ch, line, column)
        if ch in "?$":
            match = _VAR.match(self.text, self.pos)
            if not match:
                raise self.error("malformed variable name")
            self._advance(match.end() - self.pos)
            return _Token("VAR", match.group(1), line, column)
        if ch in "\"'":
            return self._string(line, column)
        if ch.isdigit():
            return self._number("", line, column)
        if (
            ch in "+-"
            and self.pos + 1 < len(self.text)
            and self.text[self.pos + 1].isdigit()
        ):
            self._advance(1)
            return self._number(ch, line, column)

        pname = _PNAME.match(self.text, self.pos)
        word = _WORD.match(self.text, self.pos)
        if pname and (not word or pname.end() > word.end()):
            self._advance(pname.end() - self.pos)
            return _Token(
                "PNAME",
                (pname.group(1) or "", pname.group(2) or ""),
                line,
                column,
            )
        if word:
            self._advance(word.end() - self.pos)
            return _Token("WORD", word.group(0), line, column)
        raise self.error(f"unexpected character {ch!r}")

    def _number(self, sign: str, line: int, column: int) -> _Token:
        match = _NUMBER.match(self.text, self.pos)
        self._advance(match.end() - self.pos)
        if match.group(2):
            datatype = XSD_DOUBLE
        elif match.group(1):
            datatype = XSD_DECIMAL
        else:
            datatype = XSD_INTEGER
        return _Token("LITERAL", Literal(sign + match.group(0), datatype), line, column)

    def _string(self, line: int, column: int) -> _Token:
        quote = self.text[self.pos]
        self._advance(1)
        chars = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated string")
            ch = self.text[self.pos]
            if ch == quote:
                self._advance(1)
                break
            if ch == "\n":
                raise self.error("newline in string")
            if ch == "\\":
                if self.pos + 1 >= len(self.text):
                    raise self.error("dangling escape")
                esc = self.text[self.pos + 1]
                if esc in _STRING_ESCAPES:
                    chars.append(_STRING_ESCAPES[esc])
                    self._advance(2)
                    continue
                if esc in "uU":
                    width = 4 if esc == "u" else 8
                    digits = self.text[self.pos + 2 : self.pos + 2 + width]
                    if len(digits) != width:
                        raise self.error("truncated unicode escape")
                    try:
                        chars.append(chr(int(digits, 16)))
                    except ValueError:
                        raise self.error("bad unicode escape") from None
                    self._advance(2 + width)
                    continue
                raise self.error(f"unknown escape \\{esc}")
            chars.append(ch)
            self._advance(1)
        value = "".join(chars)
        # attach any language tag or datatype to the token
        lang_match = _LANGTAG.match(self.text, self.pos)
        if lang_match:
            self._advance(lang_match.end() - self.pos)
            return _Token(
                "LITERAL", Literal(value, lang=lang_match.group(1)), line, column
            )
        if self.text.startswith("^^", self.pos):
            self._advance(2)
            return _Token("STRING_DT", value, line, column)
        return _Token("LITERAL", Literal(value), line, column)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _Lexer(text).tokens()
        self.index = 0
        self.prefixes: dict[str, str] = {}

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def error(self, message: str) -> ParseError:
        token = self.current
        return ParseError(message, token.line, token.column)

    def advance(self) -> _Token:
        token = self.current
        if token.kind != "EOF":
            self.index += 1
        return token

    def expect(self, kind: str, what: str) -> _Token:
        if self.current.kind != kind:
            raise self.error(f"expected {what}")
        return self.advance()

    def keyword(self) -> Optional[str]:
        if self.current.kind != "WORD":
            return None
        return self.current.value.upper()

    def check_supported(self) -> None:
        word = self.keyword()
        if word in UNSUPPORTED_KEYWORDS:
            raise self.error(f"unsupported feature: {word}")

    def take_keyword(self, name: str) -> bool:
        if self.keyword() == name:
            self.advance()
            return True
        return False

    def parse(self) -> Query:
        while self.take_keyword("PREFIX"):
            token = self.expect("PNAME", "prefix name")
            ns, local = token.value
            if local:
                raise ParseError(
                    "prefix declaration must end with ':'", token.line, token.column
                )
            iri = self.expect("IRIREF", "namespace IRI")
            self.prefixes[ns] = iri.value
        self.check_supported()
        if self.take_keyword("DESCRIBE"):
            query: Query = self._describe()
        elif self.keyword() == "SELECT":
            self.advance()
            query = self._select()
        else:
            raise self.error("expected SELECT or DESCRIBE")
        if self.current.kind != "EOF":
            self.check_supported()
            raise self.error("trailing content after query")
        return query

    def _describe(self) -> DescribeQuery:
        if self.current.kind == "IRIREF":
            return DescribeQuery(Iri(self.advance().value))
        if self.current.kind == "PNAME":
            return DescribeQuery(self._expand(self.advance()))
        raise self.error("DESCRIBE needs an IRI")

    def _expand(self, token: _Token) -> Iri:
        ns, local = token.value
        if ns not in self.prefixes:
            raise ParseError(f"undefined prefix {ns!r}", token.line, token.column)
        return Iri(self.prefixes[ns] + local)

    def _select(self) -> SelectQuery:
        distinct = self.take_keyword("DISTINCT")
        variables: list[Variable] = []
        if self.current.kind == "*":
            self.advance()
        else:
            self.check_supported()
            while self.current.kind == "VAR":
                variables.append(Variable(self.advance().value))
            if not variables:
                raise self.error("SELECT needs variables or *")
        self.check_supported()
        if not self.take_keyword("WHERE"):
            raise self.error("expected WHERE")
        patterns, filters = self._group()
        limit: Optional[int] = None
        offset = 0
        while self.keyword() in ("LIMIT", "OFFSET"):
            word = self.advance().value.upper()
            token = self.current
            if (
                token.kind != "LITERAL"
                or token.value.datatype != XSD_INTEGER
                or int(token.value.lexical) < 0
            ):
                raise self.error(f"{word} needs a nonnegative integer")
            self.advance()
            if word == "LIMIT":
                limit = int(token.value.lexical)
            else:
                offset = int(token.value.lexical)
        query = SelectQuery(
            variables=tuple(variables),
            patterns=tuple(patterns),
            filters=tuple(filters),
            distinct=distinct,
            limit=limit,
            offset=offset,
        )
        in_bgp = {v for p in query.patterns for v in p.variables()}
        for var in query.variables:
            if var not in in_bgp:
                raise ParseError(
                    f"projected variable ?{var.name} not in the graph pattern"
                )
        for flt in query.filters:
            if flt.var not in in_bgp:
                raise ParseError(
                    f"filter variable ?{flt.var.name} not in the graph pattern"
                )
        return query

    def _group(self) -> tuple[list[TriplePattern], list]:
        self.expect("{", "'{'")
        patterns: list[TriplePattern] = []
        filters: list = []
        while True:
            if self.current.kind == "}":
                self.advance()
                return patterns, filters
            if self.current.kind == "EOF":
                raise self.error("unterminated graph pattern")
            if self.take_keyword("FILTER"):
                filters.append(self._filter())
                continue
            self.check_supported()
            self._triples(patterns)

    def _triples(self, patterns: list[TriplePattern]) -> None:
        subject = self._term(position="subject")
        while True:
            predicate = self._term(position="predicate")
            while True:
                obj = self._term(position="object")
                patterns.append(TriplePattern(subject, predicate, obj))
                if self.current.kind == ",":
                    self.advance()
                    continue
                break
            if self.current.kind == ";":
                while self.current.kind == ";":
                    self.advance()
                if self.current.kind in (".", "}"):
                    break
                continue
            break
        if self.current.kind == ".":
            self.advance()

    def _term(self, position: str):
        token = self.current
        if token.kind == "VAR":
            self.advance()
            return Variable(token.value)
        if token.kind == "IRIREF":
            self.advance()
            return Iri(token.value)
        if token.kind == "PNAME":
            self.advance()
            return self._expand(token)
        if token.kind == "WORD":
            word = token.value.upper()
            if word == "A" and position == "predicate":
                self.advance()
                return RDF_TYPE
            if word in ("TRUE", "FALSE") and position == "object":
                self.advance()
                return Literal(token.value.lower(), XSD_BOOLEAN)
            self.check_supported()
            raise self.error(f"unexpected word {token.value!r}")
        if position == "object":
            if token.kind == "LITERAL":
                self.advance()
                return token.value
            if token.kind == "STRING_DT":
                self.advance()
                return Literal(token.value, self._datatype())
        raise self.error(f"expected a {position}")

    def _datatype(self) -> Iri:
        token = self.current
        if token.kind == "IRIREF":
            self.advance()
            return Iri(token.value)
        if token.kind == "PNAME":
            self.advance()
            return self._expand(token)
        raise self.error("expected datatype IRI after ^^")

    def _filter(self):
        if self.take_keyword("REGEX"):
            return self._regex()
        self.expect("(", "'('")
        if self.take_keyword("REGEX"):
            flt = self._regex()
            self.expect(")", "')'")
            return flt
        var_token = self.expect("VAR", "a variable")
        op_token = self.current
        if op_token.kind != "OP" or op_token.value not in COMPARISON_OPS:
            raise self.error("expected a comparison operator")
        self.advance()
        value = self._term(position="object")
        if isinstance(value, Variable):
            raise self.error("comparison against a variable is not supported")
        self.expect(")", "')'")
        return Comparison(Variable(var_token.value), op_token.value, value)

    def _regex(self) -> RegexFilter:
        self.expect("(", "'('")
        var_token = self.expect("VAR", "a variable")
        self.expect(",", "','")
        pattern_token = self.current
        if pattern_token.kind != "LITERAL" or pattern_token.value.lang:
            raise self.error("regex needs a plain string pattern")
        self.advance()
        pattern = pattern_token.value.lexical
        ignore_case = False
        if self.current.kind == ",":
            self.advance()
            flags_token = self.current
            if flags_token.kind != "LITERAL":
                raise self.error("regex flags must be a string")
            self.advance()
            flags = flags_token.value.lexical
            if flags == "i":
                ignore_case = True
            elif flags:
                raise ParseError(
                    f"unsupported regex flags {flags!r}",
                    flags_token.line,
                    flags_token.column,
                )
        self.expect(")", "')'")
        _validate_regex(pattern, pattern_token)
        return RegexFilter(Variable(var_token.value), pattern, ignore_case)


def _validate_regex(pattern: str, token: _Token) -> None:
    if re.search(r"\\[1-9]", pattern):
        raise ParseError(
            "regex backreferences are not supported", token.line, token.column
        )
    if "(?" in pattern:
        raise ParseError(
            "regex (?...) groups are not supported", token.line, token.column
        )
    try:
        re.compile(pattern)
    except re.error as exc:
        raise ParseError(f"bad regex: {exc}", token.line, token.column) from None


def parse_query(text: str) -> Query:
    return _Parser(text).parse()
