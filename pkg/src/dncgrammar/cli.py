"""Command-line interface.

Exit codes: 0 success, 1 operational failure (or a negative verdict), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bundled import bundled_grammars
from .control import MODES, PAPER_LITERAL, PER_INSTANCE, enumerate_words
from .grammar import GrammarError, validate_grammar
from .io import (
    DocumentError,
    dumps,
    export_dot,
    grammar_to_doc,
    graph_to_doc,
    load_grammar,
    load_graph,
    trace_to_doc,
)
from .puzzle import PuzzleError, RoleMap, classify, is_solvable
from .rewrite import DerivationError, derive, game_gen, parse_policy

_MODE_ALIASES = {"literal": PAPER_LITERAL, "instance": PER_INSTANCE}


def _resolve(spec: str, validate: bool = True):
    """A grammar path, or the name of a bundled grammar."""
    if Path(spec).exists():
        return load_grammar(spec, validate)
    bundled = bundled_grammars()
    if spec in bundled:
        return bundled[spec]
    if spec.endswith(".json") and Path(spec).stem in bundled:
        return bundled[Path(spec).stem]
    raise DocumentError(f"{spec}: no such file or bundled grammar ({', '.join(bundled)})")


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def cmd_validate(args) -> int:
    grammar = _resolve(args.grammar, validate=False)
    diags = validate_grammar(grammar)
    for d in diags:
        print(d)
    if not diags:
        print("ok")
    return 0 if not diags else 1


def cmd_derive(args) -> int:
    grammar = _resolve(args.grammar)
    word = [w for w in args.word.replace(" ", "").split(",") if w]
    trace = derive(grammar, word, parse_policy(args.policy))
    _write(args.trace, dumps(trace_to_doc(trace)))
    _write(args.dot, export_dot(trace.final, merge_bidi=True))
    print(f"nodes: {len(trace.final)}, edges: {len(trace.final.edges)}")
    print(f"in-control: {str(trace.word_in_control).lower()}, terminal: {str(trace.final_terminal).lower()}")
    return 0 if trace.in_language else 1


def cmd_generate(args) -> int:
    grammar = _resolve(args.grammar)
    mode = _MODE_ALIASES.get(args.mode, args.mode)
    word, trace = game_gen(grammar, args.seed, args.limit, mode, parse_policy(args.policy))
    print("word: " + ",".join(word))
    print(f"in-control: {str(trace.word_in_control).lower()}, terminal: {str(trace.final_terminal).lower()}")
    out = {
        "seed": args.seed,
        "limit": args.limit,
        "mode": mode,
        "word": word,
        "graph": graph_to_doc(trace.final),
    }
    ok = trace.in_language
    if args.check_solvable:
        report = is_solvable(classify(trace.final, RoleMap.parse(args.roles)))
        out["solve"] = report.to_json()
        print(f"solvable: {str(report.solvable).lower()}")
        ok = ok and report.solvable
    _write(args.json, dumps(out))
    _write(args.dot, export_dot(trace.final, merge_bidi=True))
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    grammar = _resolve(args.grammar)
    for word in enumerate_words(grammar.control, args.max_len):
        print(",".join(word) if word else "ε")
    return 0


def cmd_solve(args) -> int:
    graph, opens = load_graph(args.graph)
    pg = classify(graph, RoleMap.parse(args.roles), opens)
    for d in pg.diagnostics:
        print(f"warning: {d}", file=sys.stderr)
    report = is_solvable(pg)
    print(dumps(report.to_json()), end="")
    return 0 if report.solvable else 1


def cmd_show(args) -> int:
    grammar = _resolve(args.grammar)
    if args.dot:
        print(export_dot(grammar.start), end="")
    else:
        print(dumps(grammar_to_doc(grammar)), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dncgrammar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a grammar document")
    p.add_argument("grammar")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("derive", help="apply a production word to the start graph")
    p.add_argument("grammar")
    p.add_argument("--word", required=True, help="comma-separated production names")
    p.add_argument("--policy", default="first", help="first | random:<seed>")
    p.add_argument("--trace", help="write per-step graph documents here")
    p.add_argument("--dot", help="write the final graph as DOT here")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("generate", help="sample a control word and derive it")
    p.add_argument("grammar")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--mode", default="literal", choices=sorted(_MODE_ALIASES) + list(MODES))
    p.add_argument("--policy", default="first")
    p.add_argument("--roles", default="b,e,l,k,m")
    p.add_argument("--dot")
    p.add_argument("--json")
    p.add_argument("--check-solvable", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="list control words up to a length")
    p.add_argument("grammar")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("solve", help="decide solvability of a puzzle graph document")
    p.add_argument("graph")
    p.add_argument("--roles", default="b,e,l,k,m", help="begin,end,lock,key,neutral labels")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("show", help="print a grammar as a JSON document")
    p.add_argument("grammar")
    p.add_argument("--dot", action="store_true", help="print the start graph as DOT instead")
    p.set_defaults(func=cmd_show)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "limit", 1) < 1:
        parser.print_usage(sys.stderr)
        print("error: --limit must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (DocumentError, GrammarError, DerivationError, PuzzleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
