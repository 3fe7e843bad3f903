"""JSON documents for graphs and grammars, and DOT export."""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path

from .control import ControlSyntaxError, format_control, parse_control
from .grammar import (
    DIRECTIONS,
    EmbedInstruction,
    Grammar,
    GrammarError,
    JumpInstruction,
    Production,
    validate_grammar,
)
from .graph import GraphError, LabeledDigraph


class DocumentError(ValueError):
    pass


# -- graphs -------------------------------------------------------------


def graph_to_doc(g: LabeledDigraph) -> dict:
    return {
        "nodes": [{"id": n.id, "label": n.label, "role": n.role} for n in g.nodes],
        "edges": [{"src": e.src, "dst": e.dst, "label": e.label} for e in sorted(g.edges)],
    }


def graph_from_doc(doc: dict, where: str = "graph") -> LabeledDigraph:
    if not isinstance(doc, dict) or "nodes" not in doc:
        raise DocumentError(f"{where}: expected an object with 'nodes'")
    g = LabeledDigraph()
    try:
        for n in doc["nodes"]:
            node_id = n["id"]
            if not isinstance(node_id, int) or isinstance(node_id, bool):
                raise DocumentError(f"{where}: node id must be an integer, got {node_id!r}")
            g.add_node(str(n["label"]), int(n.get("role", 0)), node_id)
        for e in doc.get("edges", []):
            g.add_edge(e["src"], e["dst"], str(e["label"]))
    except KeyError as exc:
        raise DocumentError(f"{where}: missing field {exc}") from None
    except GraphError as exc:
        raise DocumentError(f"{where}: {exc}") from None
    return g


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DocumentError(f"{path}: no such file") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_graph(path) -> tuple[LabeledDigraph, dict | None]:
    """Read a graph document; also returns its optional ``opens`` key -> locks binding."""
    doc = _read_json(path)
    g = graph_from_doc(doc, str(path))
    opens = None
    if isinstance(doc, dict) and "opens" in doc:
        opens = {int(k): set(v) for k, v in doc["opens"].items()}
    return g, opens


# -- grammars -----------------------------------------------------------


def _instruction_to_doc(ins) -> dict:
    if isinstance(ins, EmbedInstruction):
        return {"form": "embed", "a": ins.a, "p": ins.p, "d": ins.d, "q": ins.q, "B": ins.B}
    return {"form": "jump", "a": ins.a, "alpha": ins.alpha, "b": ins.b, "d": ins.d}


def _instruction_from_doc(doc: dict, where: str):
    form = doc.get("form")
    d = doc.get("d")
    if d not in DIRECTIONS or isinstance(d, bool):
        raise DocumentError(f"{where}: direction flag must be 0, 1, or -1 (got {d!r})")
    try:
        if form == "embed":
            return EmbedInstruction(doc["a"], doc["p"], d, doc["q"], int(doc["B"]))
        if form == "jump":
            return JumpInstruction(doc["a"], doc["alpha"], doc["b"], d)
    except KeyError as exc:
        raise DocumentError(f"{where}: missing field {exc}") from None
    raise DocumentError(f"{where}: instruction form must be 'embed' or 'jump' (got {form!r})")


def grammar_to_doc(g: Grammar) -> dict:
    return {
        "sigma": sorted(g.sigma),
        "delta": sorted(g.delta),
        "gamma": sorted(g.gamma),
        "omega": sorted(g.omega),
        "start": graph_to_doc(g.start),
        "control": format_control(g.control),
        "productions": [
            {
                "name": p.name,
                "mother": p.mother,
                "daughter": graph_to_doc(p.daughter),
                "instructions": [_instruction_to_doc(i) for i in p.instructions],
            }
            for p in g.productions
        ],
    }


def grammar_from_doc(doc, name: str = "", validate: bool = True) -> Grammar:
    """Parse a grammar document; validation problems raise GrammarError unless ``validate`` is off."""
    if not isinstance(doc, dict):
        raise DocumentError("grammar document must be a JSON object")
    for key in ("sigma", "delta", "gamma", "omega", "start", "productions", "control"):
        if key not in doc:
            raise DocumentError(f"missing {key}")
    try:
        control = parse_control(doc["control"])
    except ControlSyntaxError as exc:
        raise DocumentError(f"control: {exc}") from None
    prods = []
    for i, p in enumerate(doc["productions"]):
        where = f"production {p.get('name', i)}"
        try:
            pname, mother = p["name"], p["mother"]
        except KeyError as exc:
            raise DocumentError(f"{where}: missing field {exc}") from None
        daughter = graph_from_doc(p.get("daughter"), f"{where} daughter")
        instructions = tuple(
            _instruction_from_doc(ins, f"{where} instruction {j}")
            for j, ins in enumerate(p.get("instructions", []))
        )
        prods.append(Production(pname, mother, daughter, instructions))
    g = Grammar(
        sigma=frozenset(doc["sigma"]),
        delta=frozenset(doc["delta"]),
        gamma=frozenset(doc["gamma"]),
        omega=frozenset(doc["omega"]),
        productions=tuple(prods),
        start=graph_from_doc(doc["start"], "start"),
        control=control,
        name=name,
    )
    diags = validate_grammar(g) if validate else []
    if diags:
        raise GrammarError(diags)
    return g


def load_grammar(path, validate: bool = True) -> Grammar:
    return grammar_from_doc(_read_json(path), Path(path).stem, validate)


def save_grammar(g: Grammar, path) -> None:
    Path(path).write_text(dumps(grammar_to_doc(g)), encoding="utf-8")


def trace_to_doc(trace) -> list[dict]:
    return [graph_to_doc(step.graph) for step in trace.steps]


# -- DOT ----------------------------------------------------------------


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: LabeledDigraph, merge_bidi: bool = False) -> str:
    """Deterministic DOT text; nodes by id, edges by (src, dst, label).

    With ``merge_bidi`` each antiparallel pair of equally labeled edges is
    drawn once, from the smaller id, with ``dir=both``.
    """
    lines = ["digraph G {"]
    for n in g.nodes:
        lines.append(f"  n{n.id} [label={_quote(n.label)}];")
    remaining = Counter(g.edges)
    for e in sorted(g.edges):
        if remaining[e] == 0:
            continue
        remaining[e] -= 1
        attrs = f"label={_quote(e.label)}"
        if merge_bidi and e.src != e.dst:
            rev = type(e)(e.dst, e.src, e.label)
            if remaining[rev] > 0:
                remaining[rev] -= 1
                attrs += ", dir=both"
        lines.append(f"  n{e.src} -> n{e.dst} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
