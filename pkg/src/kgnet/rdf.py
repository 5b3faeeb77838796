"""RDF terms, triples and a line-oriented triple parser.

Grammar, one statement per line::

    statement := subject predicate object "."
    subject   := iri | blank
    predicate := iri
    object    := iri | blank | literal | "<<" subject predicate object ">>"
    iri       := "<" absolute-iri ">"
    blank     := "_:" name
    literal   := '"' chars '"'          (escapes: \\" \\\\ \\n \\t \\r)

Blank lines and lines starting with ``#`` are ignored.  Literals carry only
their lexical form; datatypes and language tags are not part of the grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import ClassVar, Hashable, Iterable, TextIO, Union

from .errors import TermError, TripleSyntaxError

__all__ = [
    "IRI",
    "Literal",
    "BlankNode",
    "Triple",
    "Term",
    "parse_triples",
    "parse_term",
    "format_triples",
]

_ABSOLUTE_IRI = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>\"{}|\\^`]*\Z")
_BLANK_NAME = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_\-]*")
_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r"}
_UNESCAPES = {v: "\\" + k for k, v in _ESCAPES.items()}


@dataclass(frozen=True)
class IRI:
    value: str
    kind: ClassVar[str] = "IRI"

    def __post_init__(self):
        if not _ABSOLUTE_IRI.match(self.value):
            raise TermError(f"not an absolute IRI: {self.value!r}")

    def __str__(self):
        return f"<{self.value}>"

    @property
    def text(self) -> str:
        return self.value


@dataclass(frozen=True)
class Literal:
    lexical: str
    kind: ClassVar[str] = "Literal"

    def __str__(self):
        return '"' + "".join(_UNESCAPES.get(c, c) for c in self.lexical) + '"'

    @property
    def text(self) -> str:
        return self.lexical


@dataclass(frozen=True)
class BlankNode:
    """Blank node with a document-local id.

    ``scope`` tells documents apart: blank nodes with the same id but
    different scopes are different nodes.
    """

    id: str
    scope: Hashable = None
    kind: ClassVar[str] = "Blank"

    def __str__(self):
        return f"_:{self.id}"

    @property
    def text(self) -> str:
        return str(self)


@dataclass(frozen=True)
class Triple:
    subject: Union[IRI, BlankNode]
    predicate: IRI
    object: Union[IRI, BlankNode, Literal, "Triple"]
    kind: ClassVar[str] = "TripleTerm"

    def __post_init__(self):
        if not isinstance(self.subject, (IRI, BlankNode)):
            raise TermError(f"subject must be an IRI or a blank node, not {_kind(self.subject)}")
        if not isinstance(self.predicate, IRI):
            raise TermError(f"predicate must be an IRI, not {_kind(self.predicate)}")
        if not isinstance(self.object, (IRI, BlankNode, Literal, Triple)):
            raise TermError(f"object of kind {_kind(self.object)} is not an RDF term")

    def __str__(self):
        return f"<< {self.subject} {self.predicate} {self.object} >>"

    @property
    def text(self) -> str:
        return str(self)

    def statement(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."

    def depth(self) -> int:
        return 1 + self.object.depth() if isinstance(self.object, Triple) else 1


Term = Union[IRI, Literal, BlankNode, Triple]


def _kind(term) -> str:
    return getattr(term, "kind", type(term).__name__)


class _Line:
    def __init__(self, text: str, lineno: int, scope: Hashable):
        self.text = text
        self.lineno = lineno
        self.scope = scope
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        col = (self.pos if pos is None else pos) + 1
        return TripleSyntaxError(message, self.lineno, col)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def term(self) -> Term:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of line")
        if self.at("<<"):
            return self.triple_term()
        c = self.text[self.pos]
        if c == "<":
            end = self.text.find(">", self.pos + 1)
            if end < 0:
                raise self.error("unterminated IRI")
            value = self.text[self.pos + 1 : end]
            if not _ABSOLUTE_IRI.match(value):
                raise self.error(f"not an absolute IRI: {value!r}")
            self.pos = end + 1
            return IRI(value)
        if self.at("_:"):
            m = _BLANK_NAME.match(self.text, self.pos + 2)
            if not m:
                raise self.error("missing blank node name")
            self.pos = m.end()
            return BlankNode(m.group(), self.scope)
        if c == '"':
            return self.literal()
        raise self.error(f"unexpected character {c!r}")

    def literal(self) -> Literal:
        start = self.pos
        self.pos += 1
        chars = []
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == '"':
                self.pos += 1
                return Literal("".join(chars))
            if c == "\\":
                esc = self.text[self.pos + 1 : self.pos + 2]
                if esc not in _ESCAPES:
                    raise self.error(f"unknown escape \\{esc}")
                chars.append(_ESCAPES[esc])
                self.pos += 2
            else:
                chars.append(c)
                self.pos += 1
        raise self.error("unterminated literal", start)

    def spo(self) -> Triple:
        self.skip_ws()
        start = self.pos
        s = self.term()
        if not isinstance(s, (IRI, BlankNode)):
            raise self.error(f"{_kind(s)} in subject position", start)
        self.skip_ws()
        start = self.pos
        p = self.term()
        if not isinstance(p, IRI):
            raise self.error(f"{_kind(p)} in predicate position", start)
        o = self.term()
        return Triple(s, p, o)

    def triple_term(self) -> Triple:
        self.pos += 2
        t = self.spo()
        self.skip_ws()
        if not self.at(">>"):
            raise self.error("expected '>>'")
        self.pos += 2
        return t

    def statement(self) -> Triple:
        t = self.spo()
        self.skip_ws()
        if not self.at("."):
            raise self.error("expected '.' at end of statement")
        self.pos += 1
        self.skip_ws()
        if self.pos < len(self.text):
            raise self.error("unexpected text after '.'")
        return t


def parse_triples(source: str | TextIO | Iterable[str], scope: Hashable = None) -> list[Triple]:
    """Parse statements into a duplicate-free list of triples, in first-seen order.

    Pass a distinct ``scope`` per document when triples from several
    documents are combined, so that their blank nodes stay apart.
    """
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source
    seen: dict[Triple, None] = {}
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        seen.setdefault(_Line(line, lineno, scope).statement())
    return list(seen)


def parse_term(text: str, scope: Hashable = None) -> Term:
    """Parse a single term such as ``<http://ex/a>`` or ``"x"``."""
    line = _Line(text, 1, scope)
    term = line.term()
    line.skip_ws()
    if line.pos < len(text):
        raise line.error("unexpected text after term")
    return term


def format_triples(triples: Iterable[Triple]) -> str:
    return "".join(t.statement() + "\n" for t in triples)
