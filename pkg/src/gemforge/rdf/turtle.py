"""Hand-written Turtle parser.

Supported grammar: @prefix/@base (and their SPARQL-style spellings), prefixed
names, the ``a`` keyword, predicate-object and object lists, ``[]`` anonymous
nodes and ``[ ... ]`` property lists, ``_:`` labels, plain/language-tagged/
typed literals (short and long quoted forms), and numeric/boolean shorthand.
RDF collections ``( ... )`` are deliberately rejected with a clear error.

Blank-node labels are renumbered ``b0, b1, ...`` in first-occurrence document
order so parsed graphs compare deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional
from urllib.parse import urljoin

from gemforge.rdf.errors import ParseError
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import (
    _SCHEME,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    BlankNode,
    Iri,
    Literal,
    Subject,
    Term,
    Triple,
)

_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}

_PN_LOCAL_CHARS = set(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-"
)


@dataclass
class _Token:
    kind: str
    value: object
    line: int
    col: int


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.col)

    def _peek(self, ahead: int = 0) -> str:
        i = self.pos + ahead
        return self.text[i] if i < len(self.text) else ""

    def _advance(self, n: int = 1) -> str:
        chunk = self.text[self.pos : self.pos + n]
        for ch in chunk:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += n
        return chunk

    def _skip_ws(self) -> None:
        while self.pos < len(self.text):
            ch = self._peek()
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.text) and self._peek() != "\n":
                    self._advance()
            else:
                return

    def tokens(self) -> list[_Token]:
        out = []
        while True:
            tok = self.next_token()
            out.append(tok)
            if tok.kind == "EOF":
                return out

    def next_token(self) -> _Token:
        self._skip_ws()
        line, col = self.line, self.col
        if self.pos >= len(self.text):
            return _Token("EOF", None, line, col)
        ch = self._peek()

        if ch == "<":
            return _Token("IRIREF", self._lex_iriref(), line, col)
        if ch in "\"'":
            return _Token("STRING", self._lex_string(), line, col)
        if ch == "@":
            return self._lex_at(line, col)
        if ch == "^" and self._peek(1) == "^":
            self._advance(2)
            return _Token("HATHAT", None, line, col)
        if ch == ".":
            # Distinguish the statement terminator from a leading-dot decimal.
            if self._peek(1).isdigit():
                return _Token(*self._lex_number(), line, col)
            self._advance()
            return _Token("DOT", None, line, col)
        if ch == ";":
            self._advance()
            return _Token("SEMICOLON", None, line, col)
        if ch == ",":
            self._advance()
            return _Token("COMMA", None, line, col)
        if ch == "[":
            self._advance()
            return _Token("LBRACKET", None, line, col)
        if ch == "]":
            self._advance()
            return _Token("RBRACKET", None, line, col)
        if ch == "(":
            self._advance()
            return _Token("LPAREN", None, line, col)
        if ch == ")":
            self._advance()
            return _Token("RPAREN", None, line, col)
        if ch == "_" and self._peek(1) == ":":
            return _Token("BLANK", self._lex_blank_label(), line, col)
        if ch.isdigit() or (ch in "+-" and (self._peek(1).isdigit() or self._peek(1) == ".")):
            return _Token(*self._lex_number(), line, col)
        if ch.isalpha():
            return self._lex_word(line, col)
        if ch == ":":
            # PNAME with empty prefix, e.g. ":Museum".
            return _Token("PNAME", self._lex_pname(""), line, col)
        raise self.error(f"unexpected character {ch!r}")

    def _lex_iriref(self) -> str:
        self._advance()  # <
        out = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated IRI")
            ch = self._peek()
            if ch == ">":
                self._advance()
                return "".join(out)
            if ch == "\n":
                raise self.error("newline inside IRI")
            if ch == "\\":
                out.append(self._lex_uchar())
                continue
            self._advance()
            out.append(ch)

    def _lex_uchar(self) -> str:
        # at a backslash; only \uXXXX and \UXXXXXXXX are legal in IRIs
        self._advance()
        kind = self._peek()
        if kind == "u":
            self._advance()
            hexs = self._advance(4)
        elif kind == "U":
            self._advance()
            hexs = self._advance(8)
        else:
            raise self.error(f"bad escape \\{kind} in IRI")
        try:
            return chr(int(hexs, 16))
        except ValueError:
            raise self.error(f"bad unicode escape \\{kind}{hexs}") from None

    def _lex_string(self) -> str:
        quote = self._peek()
        longform = self.text.startswith(quote * 3, self.pos)
        if longform:
            self._advance(3)
        else:
            self._advance()
        out: list[str] = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated string literal")
            ch = self._peek()
            if longform:
                if self.text.startswith(quote * 3, self.pos):
                    self._advance(3)
                    return "".join(out)
            elif ch == quote:
                self._advance()
                return "".join(out)
            elif ch == "\n":
                raise self.error("newline in single-line string")
            if ch == "\\":
                self._advance()
                esc = self._peek()
                if esc in _ESCAPES:
                    self._advance()
                    out.append(_ESCAPES[esc])
                elif esc == "u":
                    self._advance()
                    out.append(self._hex_char(4))
                elif esc == "U":
                    self._advance()
                    out.append(self._hex_char(8))
                else:
                    raise self.error(f"bad string escape \\{esc}")
                continue
            self._advance()
            out.append(ch)

    def _hex_char(self, width: int) -> str:
        hexs = self._advance(width)
        try:
            return chr(int(hexs, 16))
        except ValueError:
            raise self.error(f"bad unicode escape {hexs!r}") from None

    def _lex_at(self, line: int, col: int) -> _Token:
        self._advance()  # @
        word = []
        while self._peek().isalnum() or self._peek() == "-":
            word.append(self._advance())
        text = "".join(word)
        if text == "prefix":
            return _Token("PREFIX_DIR", None, line, col)
        if text == "base":
            return _Token("BASE_DIR", None, line, col)
        if text and all(part.isalnum() for part in text.split("-")):
            return _Token("LANGTAG", text, line, col)
        raise ParseError(f"malformed @ directive or language tag {text!r}", line, col)

    def _lex_blank_label(self) -> str:
        self._advance(2)  # _:
        out = []
        while self._peek().isalnum() or self._peek() == "_":
            out.append(self._advance())
        if not out:
            raise self.error("blank node label expected after _:")
        return "".join(out)

    def _lex_number(self) -> tuple[str, str]:
        start = self.pos
        if self._peek() in "+-":
            self._advance()
        digits_before = 0
        while self._peek().isdigit():
            self._advance()
            digits_before += 1
        has_dot = False
        digits_after = 0
        if self._peek() == "." and self._peek(1).isdigit():
            has_dot = True
            self._advance()
            while self._peek().isdigit():
                self._advance()
                digits_after += 1
        has_exp = False
        if self._peek() in "eE" and (
            self._peek(1).isdigit() or (self._peek(1) in "+-" and self._peek(2).isdigit())
        ):
            has_exp = True
            self._advance()
            if self._peek() in "+-":
                self._advance()
            while self._peek().isdigit():
                self._advance()
        lexical = self.text[start : self.pos]
        if has_exp:
            return "DOUBLE", lexical
        if has_dot:
            return "DECIMAL", lexical
        if digits_before == 0:
            raise self.error(f"malformed number {lexical!r}")
        return "INTEGER", lexical

    def _lex_word(self, line: int, col: int) -> _Token:
        # A bare word is either a keyword (a, true, false, PREFIX, BASE) or
        # the prefix part of a prefixed name.
        start = self.pos
        while True:
            ch = self._peek()
            if ch.isalnum() or ch in "_-." or ch == "·":
                self._advance()
            else:
                break
        word = self.text[start : self.pos]
        if self._peek() == ":":
            while word.endswith("."):
                # dots can't end a prefix; they belong to following tokens
                self.pos -= 1
                self.col -= 1
                word = word[:-1]
            return _Token("PNAME", self._lex_pname(word), line, col)
        # trailing dots belong to the statement terminator
        trimmed = 0
        while word.endswith("."):
            word = word[:-1]
            trimmed += 1
        self.pos -= trimmed
        self.col -= trimmed
        if word == "a":
            return _Token("A", None, line, col)
        if word in ("true", "false"):
            return _Token("BOOLEAN", word, line, col)
        if word.lower() == "prefix":
            return _Token("SPARQL_PREFIX", None, line, col)
        if word.lower() == "base":
            return _Token("SPARQL_BASE", None, line, col)
        raise ParseError(f"unexpected bare word {word!r}", line, col)

    def _lex_pname(self, prefix: str) -> tuple[str, str]:
        assert self._peek() == ":"
        self._advance()
        out = []
        while self._peek() in _PN_LOCAL_CHARS:
            out.append(self._advance())
        local = "".join(out)
        trimmed = 0
        while local.endswith("."):
            local = local[:-1]
            trimmed += 1
        self.pos -= trimmed
        self.col -= trimmed
        return (prefix, local)


class _Parser:
    def __init__(self, text: str, base: Optional[Iri]):
        self.tokens = _Lexer(text).tokens()
        self.index = 0
        self.base: Optional[str] = base.value if base else None
        self.graph = Graph()
        self._bnode_labels: dict[str, BlankNode] = {}
        self._bnode_counter = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def next(self) -> _Token:
        tok = self.tokens[self.index]
        if tok.kind != "EOF":
            self.index += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {what}, found {tok.kind}", tok.line, tok.col)
        return tok

    def error_at(self, tok: _Token, message: str) -> ParseError:
        return ParseError(message, tok.line, tok.col)

    # -- blank nodes -------------------------------------------------------

    def _fresh_bnode(self) -> BlankNode:
        node = BlankNode(f"b{self._bnode_counter}")
        self._bnode_counter += 1
        return node

    def _labeled_bnode(self, label: str) -> BlankNode:
        if label not in self._bnode_labels:
            self._bnode_labels[label] = self._fresh_bnode()
        return self._bnode_labels[label]

    # -- IRIs --------------------------------------------------------------

    def _resolve_iri(self, text: str, tok: _Token) -> Iri:
        if not _SCHEME.match(text):
            if self.base is None:
                raise self.error_at(
                    tok, f"relative IRI {text!r} and no base IRI to resolve it"
                )
            text = urljoin(self.base, text)
        try:
            return Iri(text)
        except ValueError as exc:
            raise self.error_at(tok, str(exc)) from None

    def _expand_pname(self, prefix: str, local: str, tok: _Token) -> Iri:
        ns = self.graph.prefixes.get(prefix)
        if ns is None:
            raise self.error_at(tok, f"undefined prefix {prefix + ':'!r}")
        try:
            return Iri(ns.value + local)
        except ValueError as exc:
            raise self.error_at(tok, str(exc)) from None

    # -- grammar -----------------------------------------------------------

    def parse(self) -> Graph:
        while True:
            tok = self.peek()
            if tok.kind == "EOF":
                return self.graph
            if tok.kind == "PREFIX_DIR":
                self.next()
                self._directive_prefix(terminated=True)
            elif tok.kind == "BASE_DIR":
                self.next()
                self._directive_base(terminated=True)
            elif tok.kind == "SPARQL_PREFIX":
                self.next()
                self._directive_prefix(terminated=False)
            elif tok.kind == "SPARQL_BASE":
                self.next()
                self._directive_base(terminated=False)
            else:
                self._triples_block()
                self.expect("DOT", "'.' after statement")

    def _directive_prefix(self, terminated: bool) -> None:
        tok = self.expect("PNAME", "prefix name")
        prefix, local = tok.value  # type: ignore[misc]
        if local:
            raise self.error_at(tok, "prefix declaration must end with ':'")
        iri_tok = self.expect("IRIREF", "namespace IRI")
        self.graph.prefixes[prefix] = self._resolve_iri(iri_tok.value, iri_tok)  # type: ignore[arg-type]
        if terminated:
            self.expect("DOT", "'.' after @prefix directive")

    def _directive_base(self, terminated: bool) -> None:
        iri_tok = self.expect("IRIREF", "base IRI")
        self.base = self._resolve_iri(iri_tok.value, iri_tok).value  # type: ignore[arg-type]
        if terminated:
            self.expect("DOT", "'.' after @base directive")

    def _triples_block(self) -> None:
        tok = self.peek()
        if tok.kind == "LBRACKET":
            subject = self._bracketed_node()
            # a lone "[ ... ]" with no following predicates is a valid statement
            if self.peek().kind != "DOT":
                self._predicate_object_list(subject)
            return
        subject = self._subject()
        self._predicate_object_list(subject)

    def _subject(self) -> Subject:
        tok = self.next()
        if tok.kind == "IRIREF":
            return self._resolve_iri(tok.value, tok)  # type: ignore[arg-type]
        if tok.kind == "PNAME":
            prefix, local = tok.value  # type: ignore[misc]
            return self._expand_pname(prefix, local, tok)
        if tok.kind == "BLANK":
            return self._labeled_bnode(tok.value)  # type: ignore[arg-type]
        if tok.kind == "LPAREN":
            raise self.error_at(tok, "collections '( ... )' are not supported")
        raise self.error_at(tok, f"expected subject, found {tok.kind}")

    def _predicate_object_list(self, subject: Subject) -> None:
        while True:
            predicate = self._verb()
            self._object_list(subject, predicate)
            if self.peek().kind != "SEMICOLON":
                return
            while self.peek().kind == "SEMICOLON":
                self.next()
            # trailing ';' before '.' or ']'
            if self.peek().kind in ("DOT", "RBRACKET", "EOF"):
                return

    def _verb(self) -> Iri:
        tok = self.next()
        if tok.kind == "A":
            return RDF_TYPE
        if tok.kind == "IRIREF":
            return self._resolve_iri(tok.value, tok)  # type: ignore[arg-type]
        if tok.kind == "PNAME":
            prefix, local = tok.value  # type: ignore[misc]
            return self._expand_pname(prefix, local, tok)
        raise self.error_at(tok, f"expected predicate, found {tok.kind}")

    def _object_list(self, subject: Subject, predicate: Iri) -> None:
        while True:
            obj = self._object()
            self.graph.add(Triple(subject, predicate, obj))
            if self.peek().kind == "COMMA":
                self.next()
                continue
            return

    def _object(self) -> Term:
        tok = self.next()
        if tok.kind == "IRIREF":
            return self._resolve_iri(tok.value, tok)  # type: ignore[arg-type]
        if tok.kind == "PNAME":
            prefix, local = tok.value  # type: ignore[misc]
            return self._expand_pname(prefix, local, tok)
        if tok.kind == "BLANK":
            return self._labeled_bnode(tok.value)  # type: ignore[arg-type]
        if tok.kind == "LBRACKET":
            self.index -= 1
            return self._bracketed_node()
        if tok.kind == "STRING":
            return self._literal_tail(tok.value)  # type: ignore[arg-type]
        if tok.kind == "INTEGER":
            return Literal(tok.value, XSD_INTEGER)  # type: ignore[arg-type]
        if tok.kind == "DECIMAL":
            return Literal(tok.value, XSD_DECIMAL)  # type: ignore[arg-type]
        if tok.kind == "DOUBLE":
            return Literal(tok.value, XSD_DOUBLE)  # type: ignore[arg-type]
        if tok.kind == "BOOLEAN":
            return Literal(tok.value, XSD_BOOLEAN)  # type: ignore[arg-type]
        if tok.kind == "LPAREN":
            raise self.error_at(tok, "collections '( ... )' are not supported")
        raise self.error_at(tok, f"expected object, found {tok.kind}")

    def _literal_tail(self, lexical: str) -> Literal:
        tok = self.peek()
        if tok.kind == "LANGTAG":
            self.next()
            return Literal(lexical, lang=tok.value)  # type: ignore[arg-type]
        if tok.kind == "HATHAT":
            self.next()
            dt_tok = self.next()
            if dt_tok.kind == "IRIREF":
                dt = self._resolve_iri(dt_tok.value, dt_tok)  # type: ignore[arg-type]
            elif dt_tok.kind == "PNAME":
                prefix, local = dt_tok.value  # type: ignore[misc]
                dt = self._expand_pname(prefix, local, dt_tok)
            else:
                raise self.error_at(dt_tok, "expected datatype IRI after ^^")
            try:
                return Literal(lexical, dt)
            except ValueError as exc:
                raise self.error_at(dt_tok, str(exc)) from None
        return Literal(lexical)

    def _bracketed_node(self) -> BlankNode:
        open_tok = self.expect("LBRACKET", "'['")
        node = self._fresh_bnode()
        if self.peek().kind == "RBRACKET":
            self.next()
            return node
        self._predicate_object_list(node)
        close = self.next()
        if close.kind != "RBRACKET":
            raise self.error_at(open_tok, "unclosed '[' property list")
        return node


def parse_turtle(text: str, base: Optional[Iri] = None) -> Graph:
    """Parse a Turtle document into a Graph.

    ``@prefix`` declarations populate ``Graph.prefixes``; relative IRIs are
    resolved against ``base`` (or an in-document ``@base``). Raises
    :class:`ParseError` with line/column on malformed input.
    """
    return _Parser(text, base).parse()
