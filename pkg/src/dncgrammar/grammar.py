"""Grammar tuples, productions and connection instructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .control import ControlExpr, format_control, symbols
from .graph import LabeledDigraph

DIRECTIONS = (0, 1, -1)


class GrammarError(ValueError):
    """A grammar failed validation; ``diagnostics`` lists every problem."""

    def __init__(self, diagnostics: list[str]) -> None:
        super().__init__("; ".join(diagnostics))
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class EmbedInstruction:
    """``(a, p|d|q, B)``: re-attach former neighbors labeled ``a`` (via ``p``) to role ``B``.

    Direction ``d``: +1 neighbor -> B, -1 B -> neighbor, 0 both.
    """

    a: str
    p: str
    d: int
    q: str
    B: int


@dataclass(frozen=True)
class JumpInstruction:
    """``(a, alpha, b|d)``: link daughter nodes labeled ``a`` to remaining nodes labeled ``b``.

    Direction ``d``: +1 b -> a, -1 a -> b, 0 both.
    """

    a: str
    alpha: str
    b: str
    d: int


Instruction = Union[EmbedInstruction, JumpInstruction]


@dataclass(frozen=True, eq=False)
class Production:
    name: str
    mother: str
    daughter: LabeledDigraph
    instructions: tuple = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Production):
            return NotImplemented
        return (
            self.name == other.name
            and self.mother == other.mother
            and self.daughter == other.daughter
            and self.instructions == other.instructions
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class Grammar:
    sigma: frozenset
    delta: frozenset
    gamma: frozenset
    omega: frozenset
    productions: tuple
    start: LabeledDigraph
    control: ControlExpr
    name: str = field(default="")

    def production(self, name: str) -> Production:
        for p in self.productions:
            if p.name == name:
                return p
        raise KeyError(f"unknown production {name!r}")

    @property
    def production_names(self) -> list[str]:
        return [p.name for p in self.productions]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grammar):
            return NotImplemented
        return (
            self.sigma == other.sigma
            and self.delta == other.delta
            and self.gamma == other.gamma
            and self.omega == other.omega
            and self.productions == other.productions
            and self.start == other.start
            and self.control == other.control
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"Grammar({self.name or '?'}: P={self.production_names}, "
            f"R={format_control(self.control)})"
        )


def validate_grammar(g: Grammar) -> list[str]:
    """Return every structural problem found in ``g``; an empty list means valid."""
    diags: list[str] = []
    sigma, gamma = set(g.sigma), set(g.gamma)

    extra = sorted(set(g.delta) - sigma)
    if extra:
        diags.append(f"delta not a subset of sigma: {extra}")
    extra = sorted(set(g.omega) - gamma)
    if extra:
        diags.append(f"omega not a subset of gamma: {extra}")

    seen: set[str] = set()
    for p in g.productions:
        if p.name in seen:
            diags.append(f"duplicate production name {p.name}")
        seen.add(p.name)

    diags.extend(_graph_symbols(g.start, sigma, gamma, "start graph"))

    for p in g.productions:
        where = f"production {p.name}"
        if p.mother not in sigma:
            diags.append(f"{where}: unknown node label {p.mother!r} (mother)")
        elif p.mother in g.delta:
            diags.append(f"{where}: terminal mother label {p.mother!r}")
        if len(p.daughter) == 0:
            diags.append(f"{where}: empty daughter graph")
        diags.extend(_graph_symbols(p.daughter, sigma, gamma, f"{where} daughter"))
        roles = {n.role for n in p.daughter.nodes}
        labels = {n.label for n in p.daughter.nodes}
        for ins in p.instructions:
            if ins.d not in DIRECTIONS:
                diags.append(f"{where}: direction flag must be 0, 1, or -1 (got {ins.d!r})")
            if isinstance(ins, EmbedInstruction):
                if ins.a not in sigma:
                    diags.append(f"{where}: unknown node label {ins.a!r} in {ins}")
                for lab in (ins.p, ins.q):
                    if lab not in gamma:
                        diags.append(f"{where}: unknown edge label {lab!r} in {ins}")
                if ins.B not in roles:
                    diags.append(f"{where}: dangling target role {ins.B}")
            else:
                if ins.a not in labels:
                    diags.append(f"{where}: jump label {ins.a!r} absent from daughter")
                if ins.b not in sigma:
                    diags.append(f"{where}: unknown node label {ins.b!r} in {ins}")
                if ins.alpha not in gamma:
                    diags.append(f"{where}: unknown edge label {ins.alpha!r} in {ins}")

    for name in sorted(symbols(g.control) - seen):
        diags.append(f"control: unknown production {name}")
    return diags


def _graph_symbols(graph: LabeledDigraph, sigma: set, gamma: set, where: str) -> list[str]:
    diags = []
    for lab in sorted({n.label for n in graph.nodes} - sigma):
        diags.append(f"{where}: unknown node label {lab!r}")
    for lab in sorted({e.label for e in graph.edges} - gamma):
        diags.append(f"{where}: unknown edge label {lab!r}")
    return diags
