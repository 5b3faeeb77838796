"""RDF graphs as bipartite networks of simple nodes and triple nodes.

Every triple ``(s, p, o)`` becomes a *triple node* t labelled p together with
the two arcs ``u -> t`` and ``t -> v``, where u is the simple node labelled
s and v is either the simple node labelled o or, when o is itself a triple,
that triple's node.  Networks of this shape are generated from the empty
network by two rules:

``RDFs``
    add a fresh triple node t and arcs ``(u, t), (t, v)`` for simple nodes u
    and v (either may be new);
``RDFt``
    the same, but v is an existing triple node.

After k rule applications there are exactly k triple nodes and 2k arcs.
:func:`recognize` decides whether an arbitrary graph can be produced this
way and returns a construction sequence, or the first violated condition.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import FoldError, FormatError, KgnetError
from .network import Network
from .rdf import IRI, Literal, Term, Triple, parse_term

__all__ = [
    "RdfNetwork",
    "Step",
    "ConstructionSequence",
    "RejectionWitness",
    "ReplayError",
    "build_rdf_network",
    "recognize",
    "replay",
    "project_to_network",
    "parse_graph",
    "format_graph",
    "ENTITIES",
    "LITERALS",
    "STATEMENTS",
]

ENTITIES = "entities"
LITERALS = "literals"
STATEMENTS = "statements"


class ReplayError(KgnetError):
    pass


@dataclass(frozen=True, eq=False)
class RdfNetwork:
    """Simple nodes, triple nodes, arcs and an optional label function.

    ``labels`` maps node ids to RDF terms (IRIs for triple nodes).  It may
    be empty for purely structural graphs.  ``quoted`` lists triple nodes
    that only occur as triple terms and are not asserted themselves.
    """

    simple: frozenset[int] = frozenset()
    triple: frozenset[int] = frozenset()
    arcs: frozenset[tuple[int, int]] = frozenset()
    labels: Mapping[int, Term] = field(default_factory=dict)
    quoted: frozenset[int] = frozenset()

    @classmethod
    def of(cls, simple: Iterable[int], triple: Iterable[int], arcs: Iterable[tuple[int, int]],
           labels: Mapping[int, Term] | None = None) -> RdfNetwork:
        return cls(frozenset(simple), frozenset(triple),
                   frozenset((int(u), int(v)) for u, v in arcs), dict(labels or {}))

    @property
    def n_S(self) -> int:
        return len(self.simple)

    @property
    def n_T(self) -> int:
        return len(self.triple)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def _ends(self) -> tuple[dict[int, int], dict[int, int]]:
        subj, obj = {}, {}
        for u, v in self.arcs:
            if v in self.triple and u in self.simple:
                subj[v] = u
            if u in self.triple:
                obj[u] = v
        return subj, obj

    def subject_of(self, t: int) -> int:
        return self._ends[0][t]

    def object_of(self, t: int) -> int:
        return self._ends[1][t]

    def term(self, node: int) -> Term:
        """The RDF term a node stands for; triple nodes give their triple."""
        if node in self.triple:
            return Triple(self.term(self.subject_of(node)), self.labels[node],
                          self.term(self.object_of(node)))
        return self.labels[node]

    def triples(self, asserted_only: bool = True) -> list[Triple]:
        return [self.term(t) for t in sorted(self.triple)
                if not (asserted_only and t in self.quoted)]

    def same_graph(self, other: RdfNetwork) -> bool:
        return (self.simple == other.simple and self.triple == other.triple
                and self.arcs == other.arcs)

    def __eq__(self, other):
        if not isinstance(other, RdfNetwork):
            return NotImplemented
        return self.same_graph(other) and dict(self.labels) == dict(other.labels)

    __hash__ = None


# -- construction ---------------------------------------------------------

class _Builder:
    def __init__(self):
        self.next_id = 1
        self.simple: dict[Term, int] = {}
        self.tnode: dict[Triple, int] = {}
        self.labels: dict[int, Term] = {}
        self.arcs: set[tuple[int, int]] = set()
        self.quoted: set[int] = set()

    def fresh(self, label: Term) -> int:
        i = self.next_id
        self.next_id += 1
        self.labels[i] = label
        return i

    def simple_node(self, term: Term) -> int:
        # IRIs and literals are identified by their label, blanks by (scope, id)
        if term not in self.simple:
            self.simple[term] = self.fresh(term)
        return self.simple[term]

    def add(self, tr: Triple, asserted: bool = True) -> int:
        if tr in self.tnode:
            t = self.tnode[tr]
            if asserted:
                self.quoted.discard(t)
            return t
        if isinstance(tr.object, Triple):
            v = self.add(tr.object, asserted=False)        # RDFt
            u = self.simple_node(tr.subject)
        else:
            u = self.simple_node(tr.subject)               # RDFs
            v = self.simple_node(tr.object)
        t = self.fresh(tr.predicate)
        self.tnode[tr] = t
        if not asserted:
            self.quoted.add(t)
        self.arcs.update({(u, t), (t, v)})
        return t

    def finish(self) -> RdfNetwork:
        triple = frozenset(self.tnode.values())
        return RdfNetwork(
            frozenset(self.labels) - triple, triple, frozenset(self.arcs),
            dict(self.labels), frozenset(self.quoted),
        )


def build_rdf_network(triples: Iterable[Triple]) -> RdfNetwork:
    """Build the RDF network of a set of triples, starting from the empty one.

    Triple terms in object position are built before the triple quoting
    them, so each of them also gets its own triple node.
    """
    b = _Builder()
    for tr in triples:
        b.add(tr)
    return b.finish()


# -- recognition ----------------------------------------------------------

@dataclass(frozen=True)
class Step:
    rule: str  # "RDFs" or "RDFt"
    t: int
    u: int
    v: int

    def __str__(self):
        return f"{self.rule} t={self.t} u={self.u} v={self.v}"


@dataclass(frozen=True)
class ConstructionSequence:
    steps: tuple[Step, ...]
    accepted: bool = field(default=True, init=False)

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class RejectionWitness:
    condition: str
    witness: object
    message: str
    accepted: bool = field(default=False, init=False)

    def __str__(self):
        return f"{self.condition}: {self.message}"


def _label_kind(labels, node):
    term = labels.get(node)
    return None if term is None else term.kind


def recognize(graph: RdfNetwork) -> ConstructionSequence | RejectionWitness:
    """Decide whether ``graph`` is an RDF network.

    Checks, in order: the node partition, that every triple node has
    exactly one in-arc from a simple node and exactly one out-arc, that no
    arc joins two simple nodes, that following triple nodes through their
    objects never cycles, that there are twice as many arcs as triple
    nodes, that no simple node is isolated, and finally the label kinds
    when labels are present.
    """
    S, T, A = graph.simple, graph.triple, graph.arcs

    both = S & T
    if both:
        w = min(both)
        return RejectionWitness("partition", w, f"node {w} is both simple and triple")
    for arc in sorted(A):
        for x in arc:
            if x not in S and x not in T:
                return RejectionWitness("partition", arc, f"arc {arc} uses unknown node {x}")

    from_simple = defaultdict(list)
    out = defaultdict(list)
    for u, v in A:
        out[u].append(v)
        if u in S and v in T:
            from_simple[v].append(u)

    for t in sorted(T):
        if len(from_simple[t]) != 1:
            return RejectionWitness(
                "degree", t,
                f"triple node {t} has {len(from_simple[t])} in-arcs from simple nodes, need 1")
        if len(out[t]) != 1:
            return RejectionWitness(
                "degree", t, f"triple node {t} has out-degree {len(out[t])}, need 1")

    for u, v in sorted(A):
        if u in S and v in S:
            return RejectionWitness("orientation", (u, v), f"arc {(u, v)} joins two simple nodes")

    obj = {t: out[t][0] for t in T}
    order = _chain_order(T, obj)
    if isinstance(order, RejectionWitness):
        return order

    if len(A) != 2 * len(T):
        return RejectionWitness("count", len(A), f"{len(A)} arcs but {len(T)} triple nodes")

    touched = {x for arc in A for x in arc}
    for s in sorted(S - touched):
        return RejectionWitness("isolated", s, f"simple node {s} is not incident to any arc")

    labels = graph.labels
    if labels:
        for node in sorted(labels):
            kind = _label_kind(labels, node)
            if node in T and kind != "IRI":
                return RejectionWitness("label", node, f"triple node {node} labelled by a {kind}")
            if node in S and kind not in ("IRI", "Blank", "Literal"):
                return RejectionWitness("label", node, f"simple node {node} labelled by a {kind}")
        for t in sorted(T):
            u = from_simple[t][0]
            kind = _label_kind(labels, u)
            if kind is not None and kind not in ("IRI", "Blank"):
                return RejectionWitness(
                    "label", u, f"subject node {u} of triple node {t} labelled by a {kind}")

    return ConstructionSequence(tuple(
        Step("RDFt" if obj[t] in T else "RDFs", t, from_simple[t][0], obj[t]) for t in order
    ))


def _chain_order(T, obj) -> list[int] | RejectionWitness:
    """Triple nodes ordered so that quoted triples precede their quoters."""
    waiting = {}
    dependents = defaultdict(list)
    ready = []
    for t in T:
        if obj[t] in T:
            waiting[t] = 1
            dependents[obj[t]].append(t)
        else:
            ready.append(t)
    heapq.heapify(ready)
    order = []
    while ready:
        t = heapq.heappop(ready)
        order.append(t)
        for d in dependents[t]:
            del waiting[d]
            heapq.heappush(ready, d)
    if waiting:
        w = min(waiting)
        return RejectionWitness("cycle", w, f"triple node {w} lies on or behind a cycle of triple terms")
    return order


def replay(steps: Iterable[Step], labels: Mapping[int, Term] | None = None) -> RdfNetwork:
    """Apply rule steps to the empty network, checking each rule's premises."""
    S: set[int] = set()
    T: set[int] = set()
    A: set[tuple[int, int]] = set()
    for st in steps:
        if st.t in S or st.t in T:
            raise ReplayError(f"{st}: triple node {st.t} is not fresh")
        if st.u in T:
            raise ReplayError(f"{st}: subject {st.u} is a triple node")
        if st.rule == "RDFs":
            if st.v in T or st.v == st.t:
                raise ReplayError(f"{st}: object {st.v} must be a simple node")
            S.update((st.u, st.v))
        elif st.rule == "RDFt":
            if st.v not in T:
                raise ReplayError(f"{st}: object {st.v} is not an existing triple node")
            S.add(st.u)
        else:
            raise ReplayError(f"unknown rule {st.rule!r}")
        if st.u == st.t:
            raise ReplayError(f"{st}: subject and triple node coincide")
        T.add(st.t)
        A.update({(st.u, st.t), (st.t, st.v)})
    return RdfNetwork(frozenset(S), frozenset(T), frozenset(A), dict(labels or {}))


# -- projection -----------------------------------------------------------

def _iri_text(p) -> str:
    return p.value if isinstance(p, IRI) else str(p)


def project_to_network(rdf: RdfNetwork, attribute_predicates: Iterable[str | IRI] = ()) -> Network:
    """Multi-relational network of a labelled RDF network.

    Each predicate becomes a relation named by its IRI.  Triples whose
    predicate is listed in ``attribute_predicates`` are folded into node
    properties instead; their object must be a literal.  Triple terms in
    object position become nodes of the ``statements`` mode.  Node ids are
    those of the RDF network.
    """
    attrs = {_iri_text(p) for p in attribute_predicates}
    folded, linked = [], []
    for t in sorted(rdf.triple):
        (folded if rdf.labels[t].value in attrs else linked).append(t)

    wanted = {rdf.subject_of(t) for t in rdf.triple} | {rdf.object_of(t) for t in linked}
    net = Network()
    for i in sorted(wanted):
        if i in rdf.triple:
            net.add_node(STATEMENTS, str(rdf.term(i)), node_id=i)
            continue
        term = rdf.labels[i]
        mode = LITERALS if isinstance(term, Literal) else ENTITIES
        net.add_node(mode, term.text, node_id=i)

    for t in folded:
        name = rdf.labels[t].value
        u, v = rdf.subject_of(t), rdf.object_of(t)
        value = rdf.labels.get(v)
        if v in rdf.triple or not isinstance(value, Literal):
            raise FoldError(f"cannot fold {rdf.term(t).statement()}: object is not a literal")
        have = net.property(name, u)
        if have is not None and have != value.lexical:
            raise FoldError(
                f"cannot fold {rdf.term(t).statement()}: node already has {name}={have!r}")
        net.set_property(name, u, value.lexical)
    for t in linked:
        net.add_link(rdf.labels[t].value, rdf.subject_of(t), rdf.object_of(t))
    return net


# -- plain graph files ----------------------------------------------------
#   S <id>...        simple nodes
#   T <id>...        triple nodes
#   A <from> <to>    arc
#   L <id> <term>    optional label, in triple-term syntax

def parse_graph(text: str) -> RdfNetwork:
    simple, triple, arcs, labels = set(), set(), set(), {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tag, _, rest = line.partition(" ")
        try:
            if tag == "S":
                simple.update(int(x) for x in rest.split())
            elif tag == "T":
                triple.update(int(x) for x in rest.split())
            elif tag == "A":
                u, v = (int(x) for x in rest.split())
                arcs.add((u, v))
            elif tag == "L":
                node, _, term = rest.strip().partition(" ")
                labels[int(node)] = parse_term(term.strip())
            else:
                raise FormatError(f"unknown line tag {tag!r}", lineno)
        except FormatError:
            raise
        except (ValueError, KgnetError) as e:
            raise FormatError(f"malformed {tag} line: {e}", lineno) from None
    return RdfNetwork.of(simple, triple, arcs, labels)


def format_graph(g: RdfNetwork) -> str:
    lines = ["S " + " ".join(map(str, sorted(g.simple))),
             "T " + " ".join(map(str, sorted(g.triple)))]
    lines += [f"A {u} {v}" for u, v in sorted(g.arcs)]
    lines += [f"L {i} {g.labels[i]}" for i in sorted(g.labels)]
    return "\n".join(lines) + "\n"
