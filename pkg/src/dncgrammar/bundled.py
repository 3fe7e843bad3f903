"""The wheel, star and puzzle grammars, transcribed from their production drawings.

Circled node numbers become node roles. All edges carry the single edge label
``alpha``. Undirected strokes in a daughter graph are antiparallel pairs.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .control import parse_control
from .graph import LabeledDigraph
from .grammar import EmbedInstruction as Embed
from .grammar import Grammar, JumpInstruction, Production

A = "alpha"


def _emb(a: str, d: int, role: int) -> Embed:
    return Embed(a, A, d, A, role)


def _daughter(nodes, edges=()) -> LabeledDigraph:
    return LabeledDigraph.build(nodes, [(s, t, A) for s, t in edges])


def wheel() -> Grammar:
    p1 = Production(
        "p1",
        "W",
        # s, c, a, E
        _daughter(
            [("s", 2), ("c", 5), ("a", 3), ("E", 4)],
            [(2, 0), (0, 3), (1, 0), (3, 2), (1, 2), (1, 3)],
        ),
    )
    p2 = Production(
        "p2",
        "E",
        _daughter([("a", 3), ("E", 4)], [(1, 0)]),
        (_emb("c", 1, 3), _emb("c", 1, 4), _emb("a", -1, 3), _emb("s", 1, 4)),
    )
    p3 = Production(
        "p3",
        "E",
        _daughter([("e", 6)]),
        (_emb("c", 1, 6), _emb("a", -1, 6), _emb("s", 1, 6)),
    )
    return Grammar(
        sigma=frozenset("WEacse"),
        delta=frozenset("acse"),
        gamma=frozenset([A]),
        omega=frozenset([A]),
        productions=(p1, p2, p3),
        start=LabeledDigraph.build([("W", 1)]),
        control=parse_control("p1p2*p3"),
        name="wheel",
    )


def star() -> Grammar:
    p1 = Production("p1", "C", _daughter(["a", "C"], [(1, 0)]))
    p2 = Production("p2", "C", _daughter(["c"]), (JumpInstruction("c", A, "a", -1),))
    return Grammar(
        sigma=frozenset("Cca"),
        delta=frozenset("ac"),
        gamma=frozenset([A]),
        omega=frozenset([A]),
        productions=(p1, p2),
        start=LabeledDigraph.build(["C"]),
        control=parse_control("p1*p2"),
        name="star",
    )


def puzzle() -> Grammar:
    prods = (
        Production("p1", "S", _daughter([("b", 2), ("G", 3), ("e", 4)], [(0, 1), (1, 2)])),
        Production(
            "p2",
            "G",
            _daughter([("K", 5), ("l", 6)], [(0, 1)]),
            (_emb("b", 1, 5), _emb("b", 1, 6), _emb("e", -1, 6), _emb("m", 1, 5), _emb("m", 1, 6)),
        ),
        Production(
            "p3",
            "K",
            _daughter([("K", 5), ("l", 6), ("k", 7)], [(0, 1), (1, 2), (2, 1)]),
            (_emb("b", 1, 5), _emb("l", -1, 7), _emb("b", 0, 6), _emb("m", -1, 7)),
        ),
        Production(
            "p4",
            "K",
            _daughter([("k", 7)]),
            (_emb("b", 1, 7), _emb("m", 1, 7), _emb("l", -1, 7)),
        ),
        Production(
            "p5",
            "G",
            _daughter([("R", 8), ("G", 3)], [(0, 1)]),
            (_emb("b", 1, 8), _emb("e", -1, 3)),
        ),
        Production(
            "p6",
            "R",
            _daughter([("K", 5), ("m", 10)], [(0, 1)]),
            (_emb("b", 1, 5), _emb("b", 1, 10), _emb("G", -1, 10)),
        ),
        Production(
            "p7",
            "K",
            _daughter([("D", 9), ("K", 5)]),
            (_emb("b", 0, 9), _emb("b", 1, 5), _emb("l", -1, 9), _emb("l", 1, 5)),
        ),
        Production(
            "p8",
            "D",
            _daughter([("D", 9), ("l", 6), ("k", 7)], [(0, 1), (1, 2)]),
            (_emb("b", 1, 9), _emb("l", -1, 7), _emb("b", 0, 6)),
        ),
        # the drawing also lists (b, alpha|0|alpha, 6), but p9's daughter has no role 6
        Production("p9", "D", _daughter([("k", 7)]), (_emb("l", -1, 7),)),
    )
    return Grammar(
        sigma=frozenset("SKRGDbelkm"),
        delta=frozenset("belmk"),
        gamma=frozenset([A]),
        omega=frozenset([A]),
        productions=prods,
        start=LabeledDigraph.build([("S", 1)]),
        control=parse_control("p1(p5p6(p7p8*p9)*p3*p4)*p2p3*p4"),
        name="puzzle",
    )


def bundled_grammars() -> dict[str, Grammar]:
    return {"wheel": wheel(), "star": star(), "puzzle": puzzle()}


def bundled_path(name: str) -> Path:
    """Location of the JSON copy of a bundled grammar shipped with the package."""
    return Path(str(resources.files("dncgrammar") / "data" / f"{name}.json"))
