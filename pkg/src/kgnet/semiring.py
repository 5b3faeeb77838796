"""Value algebras for link weights, temporal quantities and matrix products.

A :class:`Semiring` bundles ``add``, ``mul`` and their identities with a
predicate describing its value domain.  The semiring laws are *not* checked
when an instance is built; a custom semiring with broken laws is accepted
and the caller owns the consequences.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from numbers import Integral, Real
from typing import Any, Callable

from .errors import InvalidValueError

__all__ = [
    "Semiring",
    "REAL",
    "BOOL",
    "COUNT",
    "SEMIRINGS",
    "get_semiring",
    "combine_parallel",
    "combine_sequential",
]


@dataclass(frozen=True)
class Semiring:
    name: str
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    zero: Any
    one: Any
    domain: str
    contains: Callable[[Any], bool]
    # maps a raw link weight (usually a number) into the value domain
    coerce: Callable[[Any], Any]

    def check(self, value):
        if not self.contains(value):
            raise InvalidValueError(
                f"{value!r} is not a value of the {self.name} semiring ({self.domain})"
            )
        return value

    def is_zero(self, value) -> bool:
        return value == self.zero

    def sum(self, values):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def __repr__(self):
        return f"Semiring({self.name!r})"


def _is_real(x) -> bool:
    return isinstance(x, Real) and not isinstance(x, bool)


def _is_count(x) -> bool:
    return isinstance(x, Integral) and not isinstance(x, bool) and x >= 0


def _to_real(x):
    if not _is_real(x):
        raise InvalidValueError(f"weight {x!r} is not a real number")
    return x


def _to_bool(x):
    if isinstance(x, bool):
        return x
    if _is_real(x):
        return x != 0
    raise InvalidValueError(f"weight {x!r} cannot be read as a boolean")


def _to_count(x):
    if _is_real(x) and x >= 0 and float(x).is_integer():
        return int(x)
    raise InvalidValueError(f"weight {x!r} is not a non-negative integer")


REAL = Semiring(
    "real", operator.add, operator.mul, 0, 1, "real numbers", _is_real, _to_real
)
BOOL = Semiring(
    "bool",
    lambda a, b: a or b,
    lambda a, b: a and b,
    False,
    True,
    "booleans",
    lambda x: isinstance(x, bool),
    _to_bool,
)
COUNT = Semiring(
    "count",
    operator.add,
    operator.mul,
    0,
    1,
    "non-negative integers",
    _is_count,
    _to_count,
)

SEMIRINGS = {sr.name: sr for sr in (REAL, BOOL, COUNT)}


def get_semiring(name: str) -> Semiring:
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise ValueError(
            f"unknown semiring {name!r}; choose one of {', '.join(SEMIRINGS)}"
        ) from None


def combine_parallel(sr: Semiring, a, b):
    """Value of two parallel links: ``sr.add(a, b)``."""
    return sr.add(sr.check(a), sr.check(b))


def combine_sequential(sr: Semiring, a, b):
    """Value of two links traversed one after the other: ``sr.mul(a, b)``."""
    return sr.mul(sr.check(a), sr.check(b))
