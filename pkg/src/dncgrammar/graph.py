"""Node- and edge-labeled directed multigraphs."""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Iterator

INCOMING = "incoming"
OUTGOING = "outgoing"


class GraphError(Exception):
    """Raised on structurally invalid graph operations."""


@dataclass(frozen=True)
class Node:
    id: int
    label: str
    role: int = 0


@dataclass(frozen=True, order=True)
class Edge:
    src: int
    dst: int
    label: str


class LabeledDigraph:
    """A directed multigraph with labeled nodes and edges.

    Self-loops and parallel edges are allowed. Node ids are non-negative
    integers; ``next_id`` is a monotone counter that never hands out an id
    twice, even after the node holding it has been removed.

    Mutating methods exist for construction. Everything else in the package
    treats graphs as values and works on copies.
    """

    def __init__(self) -> None:
        self._nodes: dict[int, Node] = {}
        self._edges: list[Edge] = []
        self.next_id = 0

    # -- construction ----------------------------------------------------

    def add_node(self, label: str, role: int = 0, node_id: int | None = None) -> int:
        if role < 0:
            raise GraphError(f"role must be >= 0, got {role}")
        if node_id is None:
            node_id = self.next_id
        elif node_id < 0:
            raise GraphError(f"node id must be >= 0, got {node_id}")
        if node_id in self._nodes:
            raise GraphError(f"duplicate node id {node_id}")
        self._nodes[node_id] = Node(node_id, label, role)
        self.next_id = max(self.next_id, node_id + 1)
        return node_id

    def add_edge(self, src: int, dst: int, label: str) -> Edge:
        for n in (src, dst):
            if n not in self._nodes:
                raise GraphError(f"unknown node id {n}")
        edge = Edge(src, dst, label)
        self._edges.append(edge)
        return edge

    def remove_node(self, node_id: int) -> None:
        """Remove a node together with every edge touching it."""
        self._require(node_id)
        del self._nodes[node_id]
        self._edges = [e for e in self._edges if node_id not in (e.src, e.dst)]

    def dedupe_edges(self) -> None:
        """Collapse edges with identical (src, dst, label), keeping first occurrences."""
        seen: set[Edge] = set()
        kept = []
        for e in self._edges:
            if e not in seen:
                seen.add(e)
                kept.append(e)
        self._edges = kept

    def copy(self) -> LabeledDigraph:
        g = LabeledDigraph()
        g._nodes = dict(self._nodes)
        g._edges = list(self._edges)
        g.next_id = self.next_id
        return g

    # -- queries ---------------------------------------------------------

    @property
    def nodes(self) -> list[Node]:
        return [self._nodes[i] for i in sorted(self._nodes)]

    @property
    def edges(self) -> list[Edge]:
        return list(self._edges)

    def node(self, node_id: int) -> Node:
        self._require(node_id)
        return self._nodes[node_id]

    def label(self, node_id: int) -> str:
        return self.node(node_id).label

    def __contains__(self, node_id: object) -> bool:
        return node_id in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._nodes))

    def node_ids(self) -> list[int]:
        return sorted(self._nodes)

    def successors(self, node_id: int) -> list[int]:
        self._require(node_id)
        return sorted({e.dst for e in self._edges if e.src == node_id})

    def edge_counter(self) -> Counter:
        return Counter(self._edges)

    def labels(self) -> Counter:
        return Counter(n.label for n in self._nodes.values())

    def check(self) -> None:
        """Raise GraphError if any edge endpoint is missing."""
        for e in self._edges:
            if e.src not in self._nodes or e.dst not in self._nodes:
                raise GraphError(f"dangling edge {e}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledDigraph):
            return NotImplemented
        return self._nodes == other._nodes and sorted(self._edges) == sorted(other._edges)

    def __repr__(self) -> str:
        return f"LabeledDigraph(nodes={len(self._nodes)}, edges={len(self._edges)})"

    def _require(self, node_id: int) -> None:
        if node_id not in self._nodes:
            raise GraphError(f"unknown node id {node_id}")

    @classmethod
    def build(
        cls,
        nodes: Iterable[tuple[str, int] | str],
        edges: Iterable[tuple[int, int, str]] = (),
    ) -> LabeledDigraph:
        """Build a graph from positional node specs.

        Each node spec is a label or a ``(label, role)`` pair; node ids are
        assigned 0, 1, 2, ... in order and edges refer to those ids.
        """
        g = cls()
        for spec in nodes:
            if isinstance(spec, str):
                g.add_node(spec)
            else:
                g.add_node(*spec)
        for src, dst, label in edges:
            g.add_edge(src, dst, label)
        return g


def is_all_terminal(g: LabeledDigraph, delta: Iterable[str], omega: Iterable[str]) -> bool:
    delta, omega = set(delta), set(omega)
    return all(n.label in delta for n in g.nodes) and all(e.label in omega for e in g.edges)


def has_directed_path(g: LabeledDigraph, source: int, target: int) -> bool:
    """True if a (possibly empty) directed walk leads from source to target."""
    g.node(source)
    g.node(target)
    adj = defaultdict(set)
    for e in g.edges:
        adj[e.src].add(e.dst)
    seen = {source}
    queue = deque([source])
    while queue:
        n = queue.popleft()
        if n == target:
            return True
        for m in adj[n]:
            if m not in seen:
                seen.add(m)
                queue.append(m)
    return False


def neighbors_of(g: LabeledDigraph, node_id: int) -> list[tuple[int, str, str]]:
    """One ``(neighbor, edge label, orientation)`` entry per incident edge end.

    A self-loop yields both an incoming and an outgoing entry.
    """
    g.node(node_id)
    out = []
    for e in g.edges:
        if e.src == node_id:
            out.append((e.dst, e.label, OUTGOING))
        if e.dst == node_id:
            out.append((e.src, e.label, INCOMING))
    return sorted(out)


def are_isomorphic(g1: LabeledDigraph, g2: LabeledDigraph) -> bool:
    """Labeled, directed multigraph isomorphism by backtracking search.

    Node roles are ignored. Candidates for each node are restricted to nodes
    with the same label and the same in/out degree signature, and every
    partial mapping is checked against edges among already-mapped nodes.
    Intended for small graphs.
    """
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return False
    if g1.labels() != g2.labels():
        return False

    mult1 = g1.edge_counter()
    mult2 = g2.edge_counter()
    pair1 = _pair_labels(mult1)
    pair2 = _pair_labels(mult2)
    sig1 = _signatures(g1, mult1)
    sig2 = _signatures(g2, mult2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    by_sig: dict = defaultdict(list)
    for n, s in sig2.items():
        by_sig[s].append(n)
    # most constrained first
    order = sorted(g1.node_ids(), key=lambda n: (len(by_sig[sig1[n]]), n))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(a: int, b: int) -> bool:
        if pair1.get((a, a)) != pair2.get((b, b)):
            return False
        for x, y in mapping.items():
            if pair1.get((a, x)) != pair2.get((b, y)):
                return False
            if pair1.get((x, a)) != pair2.get((y, b)):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for b in by_sig[sig1[a]]:
            if b in used or not consistent(a, b):
                continue
            mapping[a] = b
            used.add(b)
            if search(i + 1):
                return True
            del mapping[a]
            used.discard(b)
        return False

    return search(0)


def _pair_labels(mult: Counter) -> dict[tuple[int, int], Counter]:
    pairs: dict[tuple[int, int], Counter] = defaultdict(Counter)
    for e, k in mult.items():
        pairs[(e.src, e.dst)][e.label] += k
    return dict(pairs)


def _signatures(g: LabeledDigraph, mult: Counter) -> dict[int, tuple]:
    outs: dict[int, Counter] = defaultdict(Counter)
    ins: dict[int, Counter] = defaultdict(Counter)
    for e, k in mult.items():
        outs[e.src][e.label] += k
        ins[e.dst][e.label] += k
    return {
        n.id: (n.label, tuple(sorted(outs[n.id].items())), tuple(sorted(ins[n.id].items())))
        for n in g.nodes
    }
