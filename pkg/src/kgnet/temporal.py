"""Temporal quantities and time slices of temporal networks.

A temporal quantity (TQ) is a partial function of discrete time given as a
sorted list of disjoint half-open intervals ``[s, f)`` carrying constant
values.  Outside its intervals a TQ is undefined; undefined is never
stored, it is the absence of a covering interval (``evaluate`` returns
``None`` there).
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from numbers import Integral
from typing import Any, Iterable, NamedTuple

from .errors import DanglingActivityError, IntervalError, OverlapError
from .network import Network
from .semiring import REAL, Semiring

__all__ = [
    "Interval",
    "TemporalQuantity",
    "tq_normalize",
    "tq_evaluate",
    "tq_sum",
    "tq_product",
    "zero_tq",
    "one_tq",
    "parse_tq",
    "format_tq",
    "format_value",
    "parse_value",
    "time_slice",
    "ACTIVITY",
]

UNDEFINED = None
_TIME_MIN, _TIME_MAX = -(2**63), 2**63 - 1

# node property holding a node's activity TQ
ACTIVITY = "activity"


class Interval(NamedTuple):
    start: int
    finish: int
    value: Any


def _time(x) -> int:
    if isinstance(x, bool) or not isinstance(x, Integral):
        raise IntervalError(f"time point {x!r} is not an integer")
    x = int(x)
    if not _TIME_MIN <= x <= _TIME_MAX:
        raise IntervalError(f"time point {x} does not fit in 64 bits")
    return x


@dataclass(frozen=True, init=False)
class TemporalQuantity:
    """Immutable TQ in normal form.

    The constructor accepts intervals in any order and normalizes them:
    intervals are sorted, checked for ``s < f`` and disjointness, and
    adjacent intervals with equal values are merged.  Intervals whose value
    is ``None`` (undefined) are dropped.
    """

    intervals: tuple[Interval, ...]

    def __init__(self, intervals: Iterable[tuple[int, int, Any]] = ()):
        items = []
        for s, f, v in intervals:
            s, f = _time(s), _time(f)
            if s >= f:
                raise IntervalError(f"interval ({s}, {f}, {v!r}) is empty: need s < f")
            if v is not UNDEFINED:
                items.append(Interval(s, f, v))
        items.sort(key=lambda iv: (iv.start, iv.finish))
        out: list[Interval] = []
        for iv in items:
            if out and out[-1].finish > iv.start:
                raise OverlapError(tuple(out[-1]), tuple(iv))
            if out and out[-1].finish == iv.start and out[-1].value == iv.value:
                out[-1] = Interval(out[-1].start, iv.finish, iv.value)
            else:
                out.append(iv)
        object.__setattr__(self, "intervals", tuple(out))
        object.__setattr__(self, "_starts", [iv.start for iv in out])

    def __repr__(self):
        return f"TemporalQuantity({format_tq(self)})"

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __eq__(self, other):
        if not isinstance(other, TemporalQuantity):
            return NotImplemented
        return self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __call__(self, t: int):
        return tq_evaluate(self, t)

    def __add__(self, other):
        return tq_sum(self, other)

    def __mul__(self, other):
        return tq_product(self, other)

    def is_active(self, t: int) -> bool:
        return tq_evaluate(self, t) is not UNDEFINED

    def activity(self) -> list[tuple[int, int]]:
        """The activity time set as maximal disjoint intervals."""
        spans: list[list[int]] = []
        for s, f, _ in self.intervals:
            if spans and spans[-1][1] == s:
                spans[-1][1] = f
            else:
                spans.append([s, f])
        return [tuple(p) for p in spans]


def tq_normalize(raw: Iterable[tuple[int, int, Any]]) -> TemporalQuantity:
    return TemporalQuantity(raw)


def tq_evaluate(a: TemporalQuantity, t: int):
    """Value of ``a`` at time ``t``, or None when undefined."""
    k = bisect_right(a._starts, t) - 1
    if k >= 0:
        iv = a.intervals[k]
        if t < iv.finish:
            return iv.value
    return UNDEFINED


def _overlay(a: TemporalQuantity, b: TemporalQuantity):
    """Yield ``(s, f, a_value, b_value)`` over the elementary segments."""
    ai, bi = a.intervals, b.intervals
    cuts = sorted({p for s, f, _ in ai + bi for p in (s, f)})
    i = j = 0
    for x, y in zip(cuts, cuts[1:]):
        while i < len(ai) and ai[i].finish <= x:
            i += 1
        while j < len(bi) and bi[j].finish <= x:
            j += 1
        va = ai[i].value if i < len(ai) and ai[i].start <= x else UNDEFINED
        vb = bi[j].value if j < len(bi) and bi[j].start <= x else UNDEFINED
        yield x, y, va, vb


def tq_sum(a: TemporalQuantity, b: TemporalQuantity, sr: Semiring = REAL) -> TemporalQuantity:
    """Parallel combination; active wherever either operand is active.

    Where only one operand is defined its value is kept as is.
    """
    out = []
    for s, f, va, vb in _overlay(a, b):
        if va is UNDEFINED:
            v = vb
        elif vb is UNDEFINED:
            v = va
        else:
            v = sr.add(va, vb)
        out.append((s, f, v))
    return TemporalQuantity(out)


def tq_product(a: TemporalQuantity, b: TemporalQuantity, sr: Semiring = REAL) -> TemporalQuantity:
    """Sequential combination; active only where both operands are active."""
    return TemporalQuantity(
        (s, f, sr.mul(va, vb))
        for s, f, va, vb in _overlay(a, b)
        if va is not UNDEFINED and vb is not UNDEFINED
    )


def zero_tq() -> TemporalQuantity:
    return TemporalQuantity()


def one_tq(h_min: int, h_max: int, sr: Semiring = REAL) -> TemporalQuantity:
    """The unit TQ restricted to the finite horizon ``[h_min, h_max)``."""
    return TemporalQuantity([(h_min, h_max, sr.one)])


# -- text form: [(s,f,v);(s,f,v);...] -------------------------------------

_INT = re.compile(r"[+-]?\d+\Z")
_TRIPLE = re.compile(r"\(([^,()]+),([^,()]+),([^,()]+)\)")


def parse_value(text: str):
    text = text.strip()
    if _INT.match(text):
        return int(text)
    if text in ("true", "false"):
        return text == "true"
    try:
        return float(text)
    except ValueError:
        raise IntervalError(f"bad value {text!r}") from None


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def parse_tq(text: str) -> TemporalQuantity:
    body = re.sub(r"\s+", "", text)
    if not (body.startswith("[") and body.endswith("]")):
        raise IntervalError(f"temporal quantity must be enclosed in [...]: {text!r}")
    body = body[1:-1]
    if not body:
        return TemporalQuantity()
    items = []
    for part in body.split(";"):
        m = _TRIPLE.fullmatch(part)
        if not m:
            raise IntervalError(f"bad interval {part!r}")
        s, f, v = m.groups()
        if not (_INT.match(s) and _INT.match(f)):
            raise IntervalError(f"interval bounds must be integers: {part!r}")
        items.append((int(s), int(f), parse_value(v)))
    return TemporalQuantity(items)


def format_tq(a: TemporalQuantity) -> str:
    return "[" + ";".join(f"({s},{f},{format_value(v)})" for s, f, v in a) + "]"


# -- time slices ----------------------------------------------------------

def _at(value, t):
    """Value at ``t`` of a scalar-or-TQ; scalars are always active."""
    if isinstance(value, TemporalQuantity):
        return tq_evaluate(value, t)
    return value


def time_slice(net: Network, t: int) -> Network:
    """The subnetwork N(t) of nodes and links active at time ``t``.

    A node is inactive only when its ``activity`` property is a TQ that is
    undefined at ``t``.  TQ weights and properties are replaced by their
    value at ``t``; properties undefined at ``t`` are dropped.  A link
    active at ``t`` with an inactive end node raises
    :class:`DanglingActivityError`.
    """
    activity = net.properties.get(ACTIVITY, {})
    active = {
        nd.id for nd in net.nodes()
        if nd.id not in activity or _at(activity[nd.id], t) is not UNDEFINED
    }
    out = Network(net.name)
    for mode, ids in net.modes.items():
        out.add_mode(mode)
        for i in ids:
            if i in active:
                out.add_node(mode, net.node(i).label, node_id=i)
    for name, values in net.properties.items():
        for i, v in values.items():
            if i in active:
                v = _at(v, t)
                if v is not UNDEFINED:
                    out.set_property(name, i, v)
    for name, rel in net.relations.items():
        out.add_relation(name, rel.modes, **rel.meta)
        for link in rel:
            w = _at(link.weight, t)
            if w is UNDEFINED:
                continue
            for end in link.ends:
                if end not in active:
                    raise DanglingActivityError(link.id, end, t)
            out.add_link(name, link.source, link.target, link.directed, w)
    return out
