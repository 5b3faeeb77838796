"""Derived networks from relation matrices.

Relations of a network are turned into sparse matrices over a semiring and
combined by transposition and products, e.g. co-authorship
``WA^T * WA`` from the works-authors relation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Mapping

from .errors import DimensionMismatch, ExpressionError, InvalidValueError, UnknownNameError
from .network import Network
from .semiring import REAL, Semiring
from .temporal import TemporalQuantity, format_value

__all__ = [
    "Space",
    "SparseMatrix",
    "relation_matrix",
    "transpose",
    "matmul",
    "identity",
    "eval_expression",
    "simplify_structure",
    "network_matrices",
    "ALL_NODES",
    "SIMPLIFIED",
]

# space name for the full node set of a network with several modes
ALL_NODES = "all"
# relation name used by simplify_structure
SIMPLIFIED = "links"


@dataclass(frozen=True)
class Space:
    """A named mode with its node ids (in index order) and their labels."""

    mode: str
    ids: tuple[int, ...]
    labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.ids)

    @cached_property
    def index(self) -> dict[int, int]:
        return {i: k for k, i in enumerate(self.ids)}

    def __str__(self):
        return f"{self.mode}:{self.dim}"

    @classmethod
    def of(cls, net: Network, mode: str | None = None) -> Space:
        nodes = net.nodes(mode)
        name = mode
        if name is None:
            name = next(iter(net.modes)) if len(net.modes) == 1 else ALL_NODES
        return cls(name, tuple(nd.id for nd in nodes), tuple(net.label(nd.id) for nd in nodes))


class SparseMatrix:
    """Matrix over a semiring keyed by node ids; zero entries are not stored."""

    def __init__(self, rows: Space, cols: Space, entries: Mapping[tuple[int, int], Any],
                 sr: Semiring = REAL):
        self.rows = rows
        self.cols = cols
        self.sr = sr
        ri, ci = rows.index, cols.index
        for r, c in entries:
            if r not in ri or c not in ci:
                raise DimensionMismatch(f"entry ({r}, {c}) outside {rows} x {cols}")
        self._rows: dict[int, dict[int, Any]] = {}
        for r, c in sorted(entries, key=lambda rc: (ri[rc[0]], ci[rc[1]])):
            v = entries[r, c]
            if not sr.is_zero(v):
                self._rows.setdefault(r, {})[c] = v
        self._rows = dict(sorted(self._rows.items(), key=lambda kv: ri[kv[0]]))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows.dim, self.cols.dim)

    @property
    def entries(self) -> dict[tuple[int, int], Any]:
        return {(r, c): v for r, row in self._rows.items() for c, v in row.items()}

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def row(self, r: int) -> dict[int, Any]:
        return dict(self._rows.get(r, {}))

    def __getitem__(self, rc: tuple[int, int]):
        r, c = rc
        return self._rows.get(r, {}).get(c, self.sr.zero)

    def by_label(self) -> dict[tuple[str, str], Any]:
        rl = dict(zip(self.rows.ids, self.rows.labels))
        cl = dict(zip(self.cols.ids, self.cols.labels))
        return {(rl[r], cl[c]): v for (r, c), v in self.entries.items()}

    def to_dense(self) -> list[list[Any]]:
        out = [[self.sr.zero] * self.cols.dim for _ in range(self.rows.dim)]
        for (r, c), v in self.entries.items():
            out[self.rows.index[r]][self.cols.index[c]] = v
        return out

    @property
    def T(self) -> SparseMatrix:
        return transpose(self)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return f"<SparseMatrix {self.rows} x {self.cols} nnz={self.nnz} over {self.sr.name}>"

    def dump(self) -> str:
        """Text form: a header line, then ``row col value`` lines sorted by labels."""
        lines = [f"rows={self.rows} cols={self.cols}"]
        lines += [
            f"{r} {c} {format_value(v)}" for (r, c), v in sorted(self.by_label().items())
        ]
        return "\n".join(lines) + "\n"


def relation_matrix(net: Network, relation: str, sr: Semiring = REAL) -> SparseMatrix:
    """Matrix of one relation; parallel links are summed with ``sr.add``.

    A relation declared over modes (U, V) spans U x V; an undeclared one
    spans the whole node set.  Outside two-mode relations an edge counts as
    two opposite arcs.
    """
    rel = net.relation(relation)
    if rel.modes is not None:
        rows, cols = Space.of(net, rel.modes[0]), Space.of(net, rel.modes[1])
    else:
        rows = cols = Space.of(net)
    entries: dict[tuple[int, int], Any] = {}

    def put(r, c, w):
        entries[r, c] = sr.add(entries[r, c], w) if (r, c) in entries else w

    for link in rel:
        if isinstance(link.weight, TemporalQuantity):
            raise InvalidValueError(
                f"link {link.id} in {relation!r} has a temporal weight; take a time slice first")
        w = sr.coerce(link.weight)
        u, v = link.ends
        if rel.two_mode:
            if u not in rows.index:
                u, v = v, u
            put(u, v, w)
        else:
            put(u, v, w)
            if not link.directed and u != v:
                put(v, u, w)
    return SparseMatrix(rows, cols, entries, sr)


def network_matrices(net: Network, sr: Semiring = REAL) -> dict[str, SparseMatrix]:
    return {name: relation_matrix(net, name, sr) for name in net.relations}


def transpose(m: SparseMatrix) -> SparseMatrix:
    return SparseMatrix(m.cols, m.rows, {(c, r): v for (r, c), v in m.entries.items()}, m.sr)


def identity(space: Space, sr: Semiring = REAL) -> SparseMatrix:
    return SparseMatrix(space, space, {(i, i): sr.one for i in space.ids}, sr)


def matmul(a: SparseMatrix, b: SparseMatrix, sr: Semiring = REAL) -> SparseMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply {a.rows} x {a.cols} by {b.rows} x {b.cols}: "
            f"column space {a.cols} differs from row space {b.rows}")
    out: dict[tuple[int, int], Any] = {}
    for r, row in a._rows.items():
        acc: dict[int, Any] = {}
        for k, x in row.items():
            for c, y in b._rows.get(k, {}).items():
                p = sr.mul(x, y)
                acc[c] = sr.add(acc[c], p) if c in acc else p
        for c, v in acc.items():
            out[r, c] = v
    return SparseMatrix(a.rows, b.cols, out, sr)


# -- expressions ----------------------------------------------------------
#   expr   := factor ("*" factor)*
#   factor := (NAME | "(" expr ")") ["^T"]

_TOKEN = re.compile(r"\s*(?:(?P<op>\^T|[*()])|(?P<name>[^\s*()^]+)|(?P<bad>\S))")


class _ExprParser:
    def __init__(self, text, env, sr):
        self.text = text
        self.env = env
        self.sr = sr
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:  # trailing whitespace
                break
            if m.group("bad"):
                raise ExpressionError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
            kind = "op" if m.group("op") else "name"
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.k = 0

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None, len(self.text))

    def parse(self):
        value, _ = self.expr()
        kind, tok, pos = self.peek()
        if kind is not None:
            raise ExpressionError(f"unexpected {tok!r}", pos)
        return value

    def expr(self):
        left, ltext = self.factor()
        while self.peek()[1] == "*":
            self.k += 1
            right, rtext = self.factor()
            try:
                left = matmul(left, right, self.sr)
            except DimensionMismatch as e:
                raise DimensionMismatch(f"in product ({ltext}) * ({rtext}): {e}") from None
            ltext = f"{ltext} * {rtext}"
        return left, ltext

    def factor(self):
        kind, tok, pos = self.peek()
        if kind == "name":
            self.k += 1
            if tok not in self.env:
                raise UnknownNameError(f"unknown matrix {tok!r}", pos)
            value, text = self.env[tok], tok
        elif tok == "(":
            self.k += 1
            value, text = self.expr()
            if self.peek()[1] != ")":
                raise ExpressionError("expected ')'", self.peek()[2])
            self.k += 1
            text = f"({text})"
        else:
            what = "end of expression" if kind is None else repr(tok)
            raise ExpressionError(f"expected a name or '(' but found {what}", pos)
        if self.peek()[1] == "^T":
            self.k += 1
            value, text = transpose(value), f"{text}^T"
        return value, text


def eval_expression(expr: str, env: Mapping[str, SparseMatrix], sr: Semiring = REAL) -> SparseMatrix:
    """Evaluate a product expression such as ``WA^T * Cite * WA``.

    Products associate to the left and ``^T`` binds tighter than ``*``.
    """
    return _ExprParser(expr, env, sr).parse()


def simplify_structure(net: Network, sr: Semiring = REAL) -> Network:
    """Forget relation names: one relation holding every dyad once.

    Weights of links on the same dyad (same ends and directedness) are
    combined with ``sr.add``.
    """
    out = Network(net.name)
    for mode, ids in net.modes.items():
        out.add_mode(mode)
        for i in ids:
            out.add_node(mode, net.node(i).label, node_id=i)
    for name, values in net.properties.items():
        for i, v in values.items():
            out.set_property(name, i, v)
    out.add_relation(SIMPLIFIED)
    dyads: dict[tuple[int, int, bool], Any] = {}
    for link in net.links():
        u, v, directed, _ = link.key()
        w = sr.coerce(link.weight)
        key = (u, v, directed)
        dyads[key] = sr.add(dyads[key], w) if key in dyads else w
    for (u, v, directed), w in dyads.items():
        out.add_link(SIMPLIFIED, u, v, directed, w)
    return out
