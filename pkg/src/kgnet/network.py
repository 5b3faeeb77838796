"""Networks as graph plus data.

A :class:`Network` holds nodes partitioned into named modes, links grouped
into named relations, node properties and link weights.  Ordinary, two-mode,
multi-relational and linked networks are all instances of the same class; a
two-mode relation is just a relation declared over two modes.

Networks are built through the mutating methods and may then be sealed with
:meth:`Network.seal`, after which they are read-only.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

import numpy as np

from .errors import (
    ConflictError,
    NetworkError,
    SealedError,
    TwoModeError,
    UnknownNodeError,
)

__all__ = [
    "Node",
    "Link",
    "Relation",
    "Network",
    "NetworkCollection",
    "to_collection",
    "from_collection",
    "two_mode_matrix",
]

DEFAULT_MODE = "nodes"


@dataclass(frozen=True)
class Node:
    id: int
    label: str | None
    mode: str


@dataclass(frozen=True)
class Link:
    id: int
    relation: str
    source: int
    target: int
    directed: bool = True
    weight: Any = 1

    @property
    def ends(self) -> tuple[int, int]:
        return (self.source, self.target)

    def other(self, node: int) -> int:
        if node == self.source:
            return self.target
        if node == self.target:
            return self.source
        raise ValueError(f"node {node} is not an end of link {self.id}")

    def key(self):
        """Order-free identity used when comparing link multisets."""
        u, v = self.source, self.target
        if not self.directed and v < u:
            u, v = v, u
        return (u, v, self.directed, self.weight)


@dataclass
class Relation:
    name: str
    # declared (row mode, column mode); two-mode when they differ
    modes: tuple[str, str] | None = None
    meta: dict[str, str] = field(default_factory=dict)
    links: dict[int, Link] = field(default_factory=dict)
    # source node -> link ids; edges are indexed under both ends
    out: dict[int, list[int]] = field(default_factory=lambda: defaultdict(list))

    @property
    def two_mode(self) -> bool:
        return self.modes is not None and self.modes[0] != self.modes[1]

    def __len__(self):
        return len(self.links)

    def __iter__(self) -> Iterator[Link]:
        return iter(self.links.values())


class Network:
    def __init__(self, name: str = ""):
        self.name = name
        self.modes: dict[str, list[int]] = {}
        self.relations: dict[str, Relation] = {}
        self.properties: dict[str, dict[int, Any]] = {}
        self._nodes: dict[int, Node] = {}
        self._next_node = 1
        self._next_link = 1
        self.sealed = False

    def __repr__(self):
        return (
            f"<Network {self.name!r} n={self.n} m={self.m} "
            f"modes={len(self.modes)} relations={len(self.relations)}>"
        )

    # -- building -------------------------------------------------------

    def _check_open(self):
        if self.sealed:
            raise SealedError("network is sealed")

    def seal(self) -> Network:
        self.sealed = True
        for rel in self.relations.values():
            rel.out = dict(rel.out)
        return self

    def add_mode(self, mode: str) -> str:
        self._check_open()
        self.modes.setdefault(mode, [])
        return mode

    def add_node(
        self, mode: str = DEFAULT_MODE, label: str | None = None, node_id: int | None = None
    ) -> int:
        """Add a node to ``mode`` (created on first use) and return its id.

        Ids are allocated sequentially from 1 unless ``node_id`` is given,
        which is how merged and imported networks keep their original ids.
        """
        self._check_open()
        if node_id is None:
            node_id = self._next_node
        elif node_id in self._nodes:
            raise NetworkError(f"duplicate node id {node_id}")
        self._next_node = max(self._next_node, node_id + 1)
        self.modes.setdefault(mode, []).append(node_id)
        self._nodes[node_id] = Node(node_id, label, mode)
        return node_id

    def add_relation(
        self, name: str, modes: tuple[str, str] | None = None, **meta: str
    ) -> Relation:
        """Declare a relation, optionally restricted to ``modes = (U, V)``.

        With U != V the relation is two-mode: every link joins U and V.
        With U == V every link stays inside U.
        """
        self._check_open()
        rel = self.relations.get(name)
        if rel is None:
            rel = self.relations[name] = Relation(name)
        if modes is not None:
            modes = tuple(modes)
            if rel.modes is not None and rel.modes != modes:
                raise TwoModeError(f"relation {name!r} already declared over {rel.modes}")
            for mode in modes:
                self.add_mode(mode)
            for link in rel:
                self._check_modes(modes, link.source, link.target, name)
            rel.modes = modes
        rel.meta.update(meta)
        return rel

    def _check_modes(self, modes, u, v, relation):
        mu, mv = self._nodes[u].mode, self._nodes[v].mode
        if {mu, mv} != set(modes) or (mu == mv) != (modes[0] == modes[1]):
            raise TwoModeError(
                f"link {u}-{v} in relation {relation!r} must join "
                f"modes {modes[0]!r} and {modes[1]!r} (got {mu!r}, {mv!r})"
            )

    def add_link(
        self,
        relation: str,
        source: int,
        target: int,
        directed: bool = True,
        weight: Any = None,
    ) -> int:
        """Add an arc (or an edge when ``directed`` is false); weight defaults to 1."""
        self._check_open()
        for node in (source, target):
            if node not in self._nodes:
                raise UnknownNodeError(f"unknown node id {node}")
        rel = self.relations[relation] if relation in self.relations else self.add_relation(relation)
        if rel.modes is not None:
            self._check_modes(rel.modes, source, target, relation)
        link = Link(
            self._next_link, relation, source, target, bool(directed),
            1 if weight is None else weight,
        )
        self._next_link += 1
        rel.links[link.id] = link
        rel.out[source].append(link.id)
        if not link.directed and target != source:
            rel.out[target].append(link.id)
        return link.id

    def set_property(self, name: str, node: int, value: Any) -> None:
        self._check_open()
        if node not in self._nodes:
            raise UnknownNodeError(f"unknown node id {node}")
        self.properties.setdefault(name, {})[node] = value

    # -- queries --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._nodes)

    @property
    def m(self) -> int:
        return sum(len(rel) for rel in self.relations.values())

    def __contains__(self, node: int) -> bool:
        return node in self._nodes

    def node(self, node_id: int) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNodeError(f"unknown node id {node_id}") from None

    def nodes(self, mode: str | None = None) -> list[Node]:
        if mode is None:
            return list(self._nodes.values())
        return [self._nodes[i] for i in self.modes.get(mode, [])]

    def label(self, node_id: int) -> str:
        label = self.node(node_id).label
        return str(node_id) if label is None else label

    def find(self, label: str, mode: str | None = None) -> int | None:
        """Id of the first node carrying ``label``, or None."""
        for node in self.nodes(mode):
            if node.label == label:
                return node.id
        return None

    def links(self, relation: str | None = None) -> Iterator[Link]:
        if relation is not None:
            yield from self.relation(relation)
            return
        for rel in self.relations.values():
            yield from rel

    def link(self, link_id: int) -> Link:
        for rel in self.relations.values():
            if link_id in rel.links:
                return rel.links[link_id]
        raise KeyError(f"unknown link id {link_id}")

    def relation(self, name: str) -> Relation:
        try:
            return self.relations[name]
        except KeyError:
            raise NetworkError(f"unknown relation {name!r}") from None

    def out_links(self, relation: str, node: int) -> list[Link]:
        """Links leaving ``node`` in ``relation``; edges count from both ends."""
        rel = self.relation(relation)
        return [rel.links[i] for i in rel.out.get(node, ())]

    def incident(self, node: int) -> list[Link]:
        return [l for l in self.links() if node in l.ends]

    def property(self, name: str, node: int, default: Any = None) -> Any:
        return self.properties.get(name, {}).get(node, default)

    def content(self) -> dict:
        """Id-stable summary used to compare networks independent of link ids."""
        return {
            "nodes": {i: (nd.label, nd.mode) for i, nd in self._nodes.items()},
            "modes": {m: frozenset(ids) for m, ids in self.modes.items()},
            "relations": {
                name: (rel.modes, dict(rel.meta), Counter(l.key() for l in rel))
                for name, rel in self.relations.items()
            },
            "properties": {k: dict(v) for k, v in self.properties.items() if v},
        }

    def stats(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "modes": {m: len(ids) for m, ids in self.modes.items()},
            "relations": {name: len(rel) for name, rel in self.relations.items()},
        }


def _copy_nodes(src: Network, dst: Network, ids: Iterable[int]) -> None:
    keep = set(ids)
    for mode, members in src.modes.items():
        for i in members:
            if i in keep:
                nd = src.node(i)
                dst.add_node(mode, nd.label, node_id=i)
    for name, values in src.properties.items():
        for i, v in values.items():
            if i in keep:
                dst.set_property(name, i, v)


@dataclass
class NetworkCollection:
    """Networks sharing nodes through common global node ids.

    ``registry`` maps every node id that occurs in two or more members to
    its ``(member index, local id)`` occurrences.  Local ids equal global
    ids in this implementation.
    """

    members: list[Network] = field(default_factory=list)
    registry: dict[int, list[tuple[int, int]]] = field(default_factory=dict)

    @classmethod
    def of(cls, members: Iterable[Network]) -> NetworkCollection:
        members = list(members)
        seen = defaultdict(list)
        for k, net in enumerate(members):
            for nd in net.nodes():
                seen[nd.id].append((k, nd.id))
        return cls(members, {i: occ for i, occ in seen.items() if len(occ) > 1})

    def __len__(self):
        return len(self.members)

    def is_linked(self) -> bool:
        """True when every member shares at least one node with another member."""
        if len(self.members) < 2:
            return True
        sharing = {k for occ in self.registry.values() for k, _ in occ}
        return len(sharing) == len(self.members)


def to_collection(net: Network) -> NetworkCollection:
    """Split a linked network into one member network per relation."""
    members = []
    for name, rel in net.relations.items():
        member = Network(name)
        ends = {i for link in rel for i in link.ends}
        _copy_nodes(net, member, ends)
        member.add_relation(name, rel.modes, **rel.meta)
        for link in rel:
            member.add_link(name, link.source, link.target, link.directed, link.weight)
        members.append(member)
    return NetworkCollection.of(members)


def from_collection(coll: NetworkCollection) -> Network:
    """Merge collection members into one linked network, joining nodes by id."""
    net = Network()
    for member in coll.members:
        for mode in member.modes:
            net.add_mode(mode)
        for nd in member.nodes():
            if nd.id in net:
                have = net.node(nd.id)
                if have.label != nd.label:
                    raise ConflictError(nd.id, "label", have.label, nd.label)
                if have.mode != nd.mode:
                    raise ConflictError(nd.id, "mode", have.mode, nd.mode)
            else:
                net.add_node(nd.mode, nd.label, node_id=nd.id)
        for name, values in member.properties.items():
            for i, v in values.items():
                have = net.property(name, i, _MISSING)
                if have is not _MISSING and have != v:
                    raise ConflictError(i, name, have, v)
                net.set_property(name, i, v)
        for name, rel in member.relations.items():
            net.add_relation(name, rel.modes, **rel.meta)
            for link in rel:
                net.add_link(name, link.source, link.target, link.directed, link.weight)
    return net


_MISSING = object()


def two_mode_matrix(net: Network, relation: str) -> np.ndarray:
    """Rectangular |U| x |V| weight matrix of a two-mode relation.

    Rows follow the node order of mode U, columns that of mode V; parallel
    links add up.
    """
    rel = net.relation(relation)
    if not rel.two_mode:
        raise TwoModeError(f"relation {relation!r} is not two-mode")
    rows, cols = (net.modes[m] for m in rel.modes)
    ri = {u: k for k, u in enumerate(rows)}
    ci = {v: k for k, v in enumerate(cols)}
    weights = [link.weight for link in rel]
    dtype = float if any(isinstance(w, float) for w in weights) else int
    a = np.zeros((len(rows), len(cols)), dtype=dtype)
    for link in rel:
        if not isinstance(link.weight, (int, float)):
            raise TwoModeError(f"link {link.id} has a non-scalar weight")
        u, v = link.ends if link.source in ri else (link.target, link.source)
        a[ri[u], ci[v]] += link.weight
    return a
