"""Lock-and-key interpretation of terminal graphs and solvability search."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field

from .control import PAPER_LITERAL
from .grammar import Grammar
from .graph import LabeledDigraph
from .rewrite import FirstById, SeededRandom, game_gen

MAX_KEYS = 20


class PuzzleError(ValueError):
    pass


@dataclass(frozen=True)
class RoleMap:
    begin: frozenset = frozenset({"b"})
    end: frozenset = frozenset({"e"})
    lock: frozenset = frozenset({"l"})
    key: frozenset = frozenset({"k"})
    neutral: frozenset = frozenset({"m"})

    def __post_init__(self) -> None:
        groups = [self.begin, self.end, self.lock, self.key, self.neutral]
        for i, a in enumerate(groups):
            for b in groups[i + 1 :]:
                if a & b:
                    raise PuzzleError(f"role label sets overlap: {sorted(a & b)}")

    @classmethod
    def parse(cls, text: str) -> RoleMap:
        """``"b,e,l,k,m"``: begin, end, lock, key, neutral; ``+`` joins several labels."""
        parts = text.split(",")
        if len(parts) != 5:
            raise PuzzleError(f"expected 5 comma-separated role labels, got {text!r}")
        sets = [frozenset(x for x in p.split("+") if x) for p in parts]
        return cls(*sets)


@dataclass
class PuzzleGraph:
    graph: LabeledDigraph
    begin: int
    end: int
    locks: frozenset
    keys: frozenset
    opens: dict
    diagnostics: list = field(default_factory=list)

    def openers(self) -> dict[int, set[int]]:
        inv: dict[int, set[int]] = defaultdict(set)
        for k, locks in self.opens.items():
            for lock in locks:
                inv[lock].add(k)
        return inv


@dataclass
class SolveReport:
    solvable: bool
    witness: list | None
    unreachable_locks: list

    def to_json(self) -> dict:
        return {
            "solvable": self.solvable,
            "witness": self.witness if self.witness is not None else [],
            "unreachable_locks": self.unreachable_locks,
        }


def classify(g: LabeledDigraph, roles: RoleMap = RoleMap(), opens: dict | None = None) -> PuzzleGraph:
    """Assign puzzle roles by label.

    A key opens every lock it has an edge to, unless ``opens`` supplies the
    key -> locks binding explicitly.
    """
    begins = [n.id for n in g.nodes if n.label in roles.begin]
    ends = [n.id for n in g.nodes if n.label in roles.end]
    problems = []
    if len(begins) != 1:
        problems.append(f"expected exactly one begin node, found {begins}")
    if len(ends) != 1:
        problems.append(f"expected exactly one end node, found {ends}")
    if problems:
        raise PuzzleError("; ".join(problems))

    locks = frozenset(n.id for n in g.nodes if n.label in roles.lock)
    keys = frozenset(n.id for n in g.nodes if n.label in roles.key)
    if opens is None:
        binding = {k: set() for k in keys}
        for e in g.edges:
            if e.src in keys and e.dst in locks:
                binding[e.src].add(e.dst)
    else:
        binding = {k: set(v) for k, v in opens.items()}
        bad = [k for k in binding if k not in keys] + [
            lock for v in binding.values() for lock in v if lock not in locks
        ]
        if bad:
            raise PuzzleError(f"explicit bindings reference non key/lock nodes: {sorted(set(bad))}")
        for k in keys:
            binding.setdefault(k, set())

    pg = PuzzleGraph(g, begins[0], ends[0], locks, keys, {k: frozenset(v) for k, v in binding.items()})
    inv = pg.openers()
    pg.diagnostics = [f"lock {lock} has no key" for lock in sorted(locks) if not inv.get(lock)]
    return pg


def is_solvable(p: PuzzleGraph) -> SolveReport:
    """Breadth-first search over (node, activated keys) states.

    Entering a key activates it. A lock may be entered once any one of its
    keys is active; a lock without keys is impassable.
    """
    if len(p.keys) > MAX_KEYS:
        raise PuzzleError(f"{len(p.keys)} keys exceeds the search guard of {MAX_KEYS}")
    bit = {k: 1 << i for i, k in enumerate(sorted(p.keys))}
    need = {lock: sum(bit[k] for k in ks) for lock, ks in p.openers().items()}
    adj: dict[int, list[int]] = defaultdict(list)
    for e in sorted(p.graph.edges):
        if not adj[e.src] or adj[e.src][-1] != e.dst:
            adj[e.src].append(e.dst)

    start = (p.begin, 0)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    entered: set[int] = set()
    queue = deque([start])
    goal = None
    while queue:
        state = queue.popleft()
        node, held = state
        if node == p.end:
            goal = state
            break
        for nxt in adj[node]:
            if nxt in p.locks and not held & need.get(nxt, 0):
                continue
            if nxt in p.locks:
                entered.add(nxt)
            new = (nxt, held | bit.get(nxt, 0))
            if new not in parent:
                parent[new] = state
                queue.append(new)

    unreachable = sorted(p.locks - entered)
    if goal is None:
        return SolveReport(False, None, unreachable)
    path = []
    s = goal
    while s is not None:
        path.append(s[0])
        s = parent[s]
    return SolveReport(True, path[::-1], unreachable)


def generate_solvable(
    grammar: Grammar,
    seed: int,
    limit: int,
    mode: str = PAPER_LITERAL,
    policy: FirstById | SeededRandom = FirstById(),
    roles: RoleMap = RoleMap(),
) -> tuple[list[str], PuzzleGraph, SolveReport]:
    word, trace = game_gen(grammar, seed, limit, mode, policy)
    pg = classify(trace.final, roles)
    return word, pg, is_solvable(pg)
