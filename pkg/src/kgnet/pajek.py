"""A small Pajek-style text format that round-trips every :class:`Network`.

Layout::

    *Vertices 4 2                    second number only for two-mode networks
    1 "w1" mode="works"              mode omitted for the default mode
    ...
    *Modes "works" "authors"         only when some mode has no nodes
    *Arcs :1 "WA" rows="works" cols="authors"
    1 3 1
    *Edges :2 "knows"
    3 4 2.5
    *Arcs :3 "224" label="RIOT"
    5 6 1 [7031-7032]                temporal weight: intervals [s-f,...]
    5 6 1 [1-3:2,4-6:1]              intervals with differing values
    *Property "sex"
    3 "female"

Relation headers may carry ``key="value"`` metadata; ``rows``/``cols``
declare a two-mode relation.  Lines starting with ``%`` are comments.
This is a dialect of its own, not a complete Pajek implementation.
"""

from __future__ import annotations

import os
import re
from typing import Any

from .errors import FormatError, KgnetError
from .network import DEFAULT_MODE, Network
from .temporal import TemporalQuantity, format_tq, format_value, parse_tq, parse_value

__all__ = ["dumps_pajek", "loads_pajek", "export_pajek", "import_pajek"]

_ESC = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r"}
_UNESC = {v: "\\" + k for k, v in _ESC.items()}
_TOKEN = re.compile(
    r'\s*(?:(?P<key>[A-Za-z_]\w*)=)?(?:"(?P<q>(?:[^"\\]|\\.)*)"|(?P<bare>[^\s"]+))'
)
_SPAN = re.compile(r"(-?\d+)-(-?\d+)(?::(.+))?\Z")
_KEY = re.compile(r"[A-Za-z_]\w*\Z")


def _quote(text: str) -> str:
    return '"' + "".join(_UNESC.get(c, c) for c in text) + '"'


def _unquote(text: str) -> str:
    return re.sub(r"\\(.)", lambda m: _ESC.get(m.group(1), m.group(1)), text)


def _tokens(line: str, lineno: int) -> list[tuple[str | None, str, bool]]:
    """Split a line into ``(key, value, quoted)`` tokens."""
    out, pos = [], 0
    while pos < len(line):
        if not line[pos:].strip():
            break
        m = _TOKEN.match(line, pos)
        if m is None:
            raise FormatError(f"cannot tokenize {line[pos:].strip()!r}", lineno)
        if m.group("q") is not None:
            out.append((m.group("key"), _unquote(m.group("q")), True))
        else:
            out.append((m.group("key"), m.group("bare"), False))
        pos = m.end()
    return out


def _format_weight(w) -> str:
    if not isinstance(w, TemporalQuantity):
        return format_value(w)
    values = {v for _, _, v in w}
    if len(values) <= 1:
        head = format_value(next(iter(values))) if values else "0"
        return head + " [" + ",".join(f"{s}-{f}" for s, f, _ in w) + "]"
    head = format_value(w.intervals[0].value)
    return head + " [" + ",".join(f"{s}-{f}:{format_value(v)}" for s, f, v in w) + "]"


def _parse_weight(fields: list[str], lineno: int):
    try:
        w = parse_value(fields[0])
        if len(fields) == 1:
            return w
        ann = fields[1]
        if len(fields) > 2 or not (ann.startswith("[") and ann.endswith("]")):
            raise FormatError(f"bad weight annotation {' '.join(fields[1:])!r}", lineno)
        spans = []
        for part in filter(None, ann[1:-1].split(",")):
            m = _SPAN.match(part)
            if m is None:
                raise FormatError(f"bad interval {part!r}", lineno)
            s, f, v = m.groups()
            spans.append((int(s), int(f), w if v is None else parse_value(v)))
        return TemporalQuantity(spans)
    except FormatError:
        raise
    except KgnetError as e:
        raise FormatError(str(e), lineno) from None


def _format_property(v) -> str:
    if isinstance(v, str):
        return _quote(v)
    if isinstance(v, TemporalQuantity):
        return format_tq(v)
    return format_value(v)


def dumps_pajek(net: Network) -> str:
    lines = []
    modes = list(net.modes)
    header = f"*Vertices {net.n}"
    if len(modes) == 2:
        header += f" {len(net.modes[modes[0]])}"
    lines.append(header)
    for mode in modes:
        for nd in net.nodes(mode):
            line = str(nd.id)
            if nd.label is not None:
                line += " " + _quote(nd.label)
            if mode != DEFAULT_MODE:
                line += f" mode={_quote(mode)}"
            lines.append(line)
    if any(not ids for ids in net.modes.values()):
        lines.append("*Modes " + " ".join(_quote(m) for m in modes))

    for r, (name, rel) in enumerate(net.relations.items(), 1):
        extra = ""
        if rel.modes is not None:
            extra += f" rows={_quote(rel.modes[0])} cols={_quote(rel.modes[1])}"
        for key, value in rel.meta.items():
            if not _KEY.match(key) or key in ("rows", "cols"):
                raise FormatError(f"relation {name!r}: metadata key {key!r} cannot be written")
            extra += f" {key}={_quote(str(value))}"
        arcs = [l for l in rel if l.directed]
        edges = [l for l in rel if not l.directed]
        for section, links in (("Arcs", arcs), ("Edges", edges)):
            if links or (section == "Arcs" and not edges):
                lines.append(f"*{section} :{r} {_quote(name)}{extra}")
                lines += [f"{l.source} {l.target} {_format_weight(l.weight)}" for l in links]

    for name, values in net.properties.items():
        if not values:
            continue
        lines.append(f"*Property {_quote(name)}")
        lines += [f"{i} {_format_property(v)}" for i, v in values.items()]
    return "\n".join(lines) + "\n"


def loads_pajek(text: str) -> Network:
    net = Network()
    section = None
    relation = None
    directed = True
    prop = None
    expected = None
    mode_order = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            word, _, rest = line[1:].partition(" ")
            word = word.lower()
            toks = _tokens(rest, lineno)
            if section is None and word != "vertices":
                raise FormatError("file must start with *Vertices", lineno)
            if word == "vertices":
                if section is not None:
                    raise FormatError("duplicate *Vertices section", lineno)
                if not toks or len(toks) > 2 or not all(t[1].isdigit() for t in toks):
                    raise FormatError("expected '*Vertices n [n1]'", lineno)
                expected = int(toks[0][1])
            elif word == "modes":
                mode_order = [t[1] for t in toks]
            elif word in ("arcs", "edges"):
                directed = word == "arcs"
                relation = _relation_header(net, toks, lineno)
            elif word == "property":
                if len(toks) != 1:
                    raise FormatError("expected '*Property \"name\"'", lineno)
                prop = toks[0][1]
                net.properties.setdefault(prop, {})
            else:
                raise FormatError(f"unknown section *{word}", lineno)
            section = word
            continue

        if section is None:
            raise FormatError("file must start with *Vertices", lineno)
        toks = _tokens(line, lineno)
        try:
            if section == "vertices":
                _vertex(net, toks, lineno)
            elif section in ("arcs", "edges"):
                if len(toks) < 3 or any(t[0] or t[2] for t in toks):
                    raise FormatError("expected 'from to weight [intervals]'", lineno)
                vals = [t[1] for t in toks]
                net.add_link(relation, int(vals[0]), int(vals[1]), directed,
                             _parse_weight(vals[2:], lineno))
            elif section == "property":
                if len(toks) != 2:
                    raise FormatError("expected 'id value'", lineno)
                net.set_property(prop, int(toks[0][1]), _property_value(toks[1], lineno))
            else:
                raise FormatError(f"unexpected line in *{section} section", lineno)
        except FormatError:
            raise
        except (KgnetError, ValueError) as e:
            raise FormatError(str(e), lineno) from None

    if section is None:
        raise FormatError("missing *Vertices section")
    if net.n != expected:
        raise FormatError(f"*Vertices declares {expected} nodes but {net.n} are listed")
    if mode_order is not None:
        net.modes = {m: net.modes.get(m, []) for m in mode_order}
    return net


def _relation_header(net: Network, toks, lineno) -> str:
    name = None
    if toks and not toks[0][2] and toks[0][1].startswith(":"):
        name = toks[0][1][1:]
        toks = toks[1:]
    if toks and toks[0][0] is None:
        name = toks[0][1]
        toks = toks[1:]
    if name is None:
        name = "1"
    meta = {}
    for key, value, _ in toks:
        if key is None:
            raise FormatError(f"unexpected token {value!r} in relation header", lineno)
        meta[key] = value
    modes = None
    if "rows" in meta or "cols" in meta:
        if not ("rows" in meta and "cols" in meta):
            raise FormatError("two-mode relation needs both rows= and cols=", lineno)
        modes = (meta.pop("rows"), meta.pop("cols"))
    try:
        net.add_relation(name, modes, **meta)
    except KgnetError as e:
        raise FormatError(str(e), lineno) from None
    return name


def _vertex(net: Network, toks, lineno) -> None:
    if not toks or toks[0][0] or toks[0][2] or not toks[0][1].isdigit():
        raise FormatError("vertex line must start with a numeric id", lineno)
    node_id = int(toks[0][1])
    label, mode = None, DEFAULT_MODE
    for key, value, quoted in toks[1:]:
        if key == "mode":
            mode = value
        elif key is None and quoted and label is None:
            label = value
        elif key is None and not quoted:
            continue  # coordinates and other Pajek vertex attributes
        else:
            raise FormatError(f"unexpected token {value!r} in vertex line", lineno)
    net.add_node(mode, label, node_id=node_id)


def _property_value(tok, lineno) -> Any:
    key, value, quoted = tok
    if quoted:
        return value
    try:
        if value.startswith("["):
            return parse_tq(value)
        return parse_value(value)
    except KgnetError as e:
        raise FormatError(str(e), lineno) from None


def export_pajek(net: Network, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_pajek(net))


def import_pajek(path: str | os.PathLike) -> Network:
    with open(path, encoding="utf-8") as fh:
        return loads_pajek(fh.read())
