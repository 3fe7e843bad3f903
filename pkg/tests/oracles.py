"""Brute-force reference implementations used only by the tests."""

import itertools
from collections import Counter

from dncgrammar.graph import LabeledDigraph


def iso_by_permutations(g1: LabeledDigraph, g2: LabeledDigraph) -> bool:
    """Try every bijection; no pruning beyond sizes."""
    n1, n2 = g1.node_ids(), g2.node_ids()
    if len(n1) != len(n2):
        return False
    e2 = Counter((e.src, e.dst, e.label) for e in g2.edges)
    for perm in itertools.permutations(n2):
        m = dict(zip(n1, perm))
        if any(g1.label(a) != g2.label(m[a]) for a in n1):
            continue
        if Counter((m[e.src], m[e.dst], e.label) for e in g1.edges) == e2:
            return True
    return False


def closure_by_squaring(g: LabeledDigraph) -> dict:
    """Reflexive-transitive reachability via boolean matrix squaring."""
    ids = g.node_ids()
    idx = {n: i for i, n in enumerate(ids)}
    n = len(ids)
    m = [[i == j for j in range(n)] for i in range(n)]
    for e in g.edges:
        m[idx[e.src]][idx[e.dst]] = True
    for _ in range(max(1, n.bit_length())):
        m = [[any(m[i][k] and m[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return {(a, b): m[idx[a]][idx[b]] for a in ids for b in ids}


def solvable_by_enumeration(graph: LabeledDigraph, begin, end, locks, openers) -> bool:
    """Depth-first enumeration of every walk that never repeats a (node, keys) state."""
    keys_of = {k for ks in openers.values() for k in ks}
    adj = {}
    for e in graph.edges:
        adj.setdefault(e.src, set()).add(e.dst)

    def passable(node, held):
        if node not in locks:
            return True
        return bool(openers.get(node, set()) & held)

    def walk(node, held, path):
        if node == end:
            return True
        for nxt in sorted(adj.get(node, ())):
            if not passable(nxt, held):
                continue
            new_held = held | ({nxt} if nxt in keys_of else set())
            state = (nxt, frozenset(new_held))
            if state in path:
                continue
            if walk(nxt, new_held, path | {state}):
                return True
        return False

    return walk(begin, frozenset(), {(begin, frozenset())})


def replay_witness(graph: LabeledDigraph, witness, begin, end, locks, openers) -> bool:
    """Check a witness edge by edge, tracking visited keys."""
    if not witness or witness[0] != begin or witness[-1] != end:
        return False
    edges = {(e.src, e.dst) for e in graph.edges}
    seen = {witness[0]}
    for a, b in zip(witness, witness[1:]):
        if (a, b) not in edges:
            return False
        if b in locks and not (openers.get(b, set()) & seen):
            return False
        seen.add(b)
    return True
