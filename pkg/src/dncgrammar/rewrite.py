"""Production application and controlled derivations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .control import PAPER_LITERAL, Prng, accepts, sample_word
from .grammar import EmbedInstruction, Grammar, Production
from .graph import LabeledDigraph, is_all_terminal


class DerivationError(RuntimeError):
    pass


@dataclass(frozen=True)
class FirstById:
    def choose(self, candidates: list[int], step: int) -> int:
        return candidates[0]


@dataclass(frozen=True)
class SeededRandom:
    """Pick among candidates with the control LCG; draw ``step`` of the seed's stream."""

    seed: int

    def choose(self, candidates: list[int], step: int) -> int:
        rng = Prng(self.seed)
        for _ in range(step + 1):
            value, rng = rng.next()
        return candidates[value % len(candidates)]


SelectionPolicy = FirstById | SeededRandom


def parse_policy(text: str) -> FirstById | SeededRandom:
    if text == "first":
        return FirstById()
    if text.startswith("random:"):
        return SeededRandom(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown policy {text!r}; expected 'first' or 'random:<seed>'")


@dataclass
class Step:
    production: str
    replaced: int
    graph: LabeledDigraph


@dataclass
class DerivationTrace:
    start: LabeledDigraph
    word: list[str]
    steps: list[Step] = field(default_factory=list)
    word_in_control: bool = False
    final_terminal: bool = False

    @property
    def final(self) -> LabeledDigraph:
        return self.steps[-1].graph if self.steps else self.start

    @property
    def in_language(self) -> bool:
        return self.word_in_control and self.final_terminal


def _directed(src: int, dst: int, d: int) -> list[tuple[int, int]]:
    if d == 1:
        return [(src, dst)]
    if d == -1:
        return [(dst, src)]
    return [(src, dst), (dst, src)]


def apply_production(
    host: LabeledDigraph, mother: int, prod: Production, dedupe_edges: bool = True
) -> LabeledDigraph:
    """Replace ``mother`` by a fresh copy of ``prod.daughter`` and embed it.

    Embed instructions fire for every former neighbor with the right node and
    edge label, whatever the orientation of the old edge. Jump instructions
    fire for every pair of a daughter node and a surviving host node with the
    right labels. Instructions that match nothing are silently skipped.
    """
    if mother not in host:
        raise DerivationError(f"mother node {mother} not in host graph")
    if host.label(mother) != prod.mother:
        raise DerivationError(
            f"production {prod.name} rewrites {prod.mother!r}, "
            f"node {mother} is labeled {host.label(mother)!r}"
        )

    former = set()
    for e in host.edges:
        if e.src == mother and e.dst != mother:
            former.add((e.dst, e.label))
        elif e.dst == mother and e.src != mother:
            former.add((e.src, e.label))

    g = host.copy()
    g.remove_node(mother)
    remaining = g.node_ids()

    fresh = {}
    for n in prod.daughter.nodes:
        fresh[n.id] = g.add_node(n.label, n.role)
    for e in prod.daughter.edges:
        g.add_edge(fresh[e.src], fresh[e.dst], e.label)
    inserted = [g.node(i) for i in fresh.values()]

    for ins in prod.instructions:
        if isinstance(ins, EmbedInstruction):
            targets = [n.id for n in inserted if n.role == ins.B]
            neighbors = sorted(x for x, lab in former if lab == ins.p and g.label(x) == ins.a)
            for x in neighbors:
                for t in targets:
                    for s, d in _directed(x, t, ins.d):
                        g.add_edge(s, d, ins.q)
        else:
            ours = [n.id for n in inserted if n.label == ins.a]
            theirs = [x for x in remaining if g.label(x) == ins.b]
            for a in ours:
                for b in theirs:
                    for s, d in _directed(b, a, ins.d):
                        g.add_edge(s, d, ins.alpha)

    if dedupe_edges:
        g.dedupe_edges()
    return g


def find_candidates(host: LabeledDigraph, label: str) -> list[int]:
    return [n.id for n in host.nodes if n.label == label]


def derive(
    grammar: Grammar,
    word,
    policy: FirstById | SeededRandom = FirstById(),
    dedupe_edges: bool = True,
) -> DerivationTrace:
    word = list(word)
    known = set(grammar.production_names)
    for i, name in enumerate(word, 1):
        if name not in known:
            raise DerivationError(f"step {i}: unknown production {name!r}")

    trace = DerivationTrace(start=grammar.start.copy(), word=word)
    host = trace.start
    for i, name in enumerate(word):
        prod = grammar.production(name)
        candidates = find_candidates(host, prod.mother)
        if not candidates:
            raise DerivationError(
                f"stuck derivation at step {i + 1}: {name} needs a node labeled "
                f"{prod.mother!r}, none present"
            )
        mother = policy.choose(candidates, i)
        host = apply_production(host, mother, prod, dedupe_edges)
        trace.steps.append(Step(name, mother, host))

    trace.word_in_control = accepts(grammar.control, word)
    trace.final_terminal = is_all_terminal(trace.final, grammar.delta, grammar.omega)
    return trace


def game_gen(
    grammar: Grammar,
    seed: int,
    limit: int,
    mode: str = PAPER_LITERAL,
    policy: FirstById | SeededRandom = FirstById(),
) -> tuple[list[str], DerivationTrace]:
    word = sample_word(grammar.control, seed, limit, mode)
    return word, derive(grammar, word, policy)
