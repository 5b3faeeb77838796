"""KEDS/WEIS event data as a multi-relational temporal network.

Each event line reads ``YYMMDD SOURCE TARGET CODE [(LABEL)] [text]`` with
whitespace between fields.  Actors become nodes, event codes become
relations and every event becomes an arc whose weight is a temporal
quantity active on the event's day only.
"""

from __future__ import annotations

import datetime as dt
import re
from dataclasses import dataclass
from typing import Iterable, TextIO

from .errors import FormatError
from .network import Network
from .temporal import TemporalQuantity

__all__ = ["KedsEvent", "parse_date", "day_number", "read_keds", "parse_keds", "ACTORS"]

ACTORS = "actors"
EPOCH = dt.date(1970, 1, 1)
PIVOT = 50

_LINE = re.compile(r"\s*(\S+)\s+(\S+)\s+(\S+)\s+(\S+)(?:\s+\(([^)]*)\))?\s*(.*?)\s*\Z")


@dataclass(frozen=True)
class KedsEvent:
    date: dt.date
    source: str
    target: str
    code: str
    label: str = ""
    tail: str = ""

    @property
    def day(self) -> int:
        return day_number(self.date)


def parse_date(text: str) -> dt.date:
    """YYMMDD with a century pivot: 50-99 are 19xx, 00-49 are 20xx."""
    if not re.fullmatch(r"\d{6}", text):
        raise ValueError(f"date {text!r} is not YYMMDD")
    yy, mm, dd = int(text[:2]), int(text[2:4]), int(text[4:])
    year = 1900 + yy if yy >= PIVOT else 2000 + yy
    return dt.date(year, mm, dd)


def day_number(date: dt.date) -> int:
    return (date - EPOCH).days


def read_keds(lines: str | TextIO | Iterable[str]) -> list[KedsEvent]:
    if isinstance(lines, str):
        lines = lines.splitlines()
    events = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        m = _LINE.match(line.rstrip("\r\n"))
        if m is None:
            raise FormatError("expected at least 4 fields: date source target code", lineno)
        date, source, target, code, label, tail = m.groups()
        try:
            day = parse_date(date)
        except ValueError as e:
            raise FormatError(f"malformed date {date!r}: {e}", lineno) from None
        events.append(KedsEvent(day, source, target, code, label or "", tail))
    return events


def parse_keds(lines: str | TextIO | Iterable[str]) -> Network:
    """Network with one node per actor, one relation per event code, one arc per event."""
    net = Network("keds")
    actors: dict[str, int] = {}
    for ev in read_keds(lines):
        for actor in (ev.source, ev.target):
            if actor not in actors:
                actors[actor] = net.add_node(ACTORS, actor)
        if ev.code not in net.relations:
            meta = {"label": ev.label} if ev.label else {}
            net.add_relation(ev.code, **meta)
        weight = TemporalQuantity([(ev.day, ev.day + 1, 1)])
        net.add_link(ev.code, actors[ev.source], actors[ev.target], weight=weight)
    return net
