"""Regular control expressions over production names.

Surface syntax: juxtaposition concatenates, postfix ``*`` is Kleene star,
``|`` is union, parentheses group, whitespace is ignored. A name is a run of
letters/underscores followed by an optional run of digits, so ``p1p2`` reads
as ``p1`` ``p2`` while ``p12`` is a single name.
"""

from __future__ import annotations

import re
import typing
from dataclasses import dataclass
from typing import Iterator

LCG_A = 1664525
LCG_C = 1013904223
LCG_M = 2**32

PAPER_LITERAL = "paper-literal"
PER_INSTANCE = "per-instance"
MODES = (PAPER_LITERAL, PER_INSTANCE)

MAX_ENUM_LEN = 12


class ControlSyntaxError(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Concat:
    parts: tuple


@dataclass(frozen=True)
class Star:
    inner: object


@dataclass(frozen=True)
class Union:
    options: tuple


@dataclass(frozen=True)
class Group:
    inner: object


ControlExpr = typing.Union[Symbol, Concat, Star, Union, Group]


# -- parsing ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_]+[0-9]*)|([()*|]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            offset = len(text) - len(text[pos:].lstrip())
            raise ControlSyntaxError(f"unexpected character {text[offset]!r}", offset)
        if m.group(1):
            tokens.append(("name", m.group(1), m.start(1)))
        else:
            tokens.append((m.group(2), m.group(2), m.start(2)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def parse(self) -> ControlExpr:
        if not self.tokens:
            raise ControlSyntaxError("empty control expression", 0)
        expr = self.union()
        tok = self.peek()
        if tok is not None:
            raise ControlSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return expr

    def union(self) -> ControlExpr:
        options = [self.concat()]
        while (tok := self.peek()) is not None and tok[0] == "|":
            self.i += 1
            options.append(self.concat())
        return options[0] if len(options) == 1 else Union(tuple(options))

    def concat(self) -> ControlExpr:
        parts = []
        while (tok := self.peek()) is not None and tok[0] in ("name", "("):
            parts.append(self.postfix())
        if not parts:
            tok = self.peek()
            if tok is None:
                raise ControlSyntaxError("expected a name or '('", len(self.text))
            if tok[0] == "*":
                raise ControlSyntaxError("dangling '*'", tok[2])
            raise ControlSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def postfix(self) -> ControlExpr:
        expr = self.atom()
        while (tok := self.peek()) is not None and tok[0] == "*":
            self.i += 1
            expr = Star(expr)
        return expr

    def atom(self) -> ControlExpr:
        kind, value, offset = self.tokens[self.i]
        self.i += 1
        if kind == "name":
            return Symbol(value)
        inner = self.union()
        tok = self.peek()
        if tok is None or tok[0] != ")":
            raise ControlSyntaxError("unbalanced '('", offset)
        self.i += 1
        return Group(inner)


def parse_control(text: str) -> ControlExpr:
    return _Parser(text).parse()


def format_control(expr: ControlExpr) -> str:
    """Render an expression back into surface syntax."""
    if isinstance(expr, Symbol):
        return expr.name
    if isinstance(expr, Group):
        return "(" + format_control(expr.inner) + ")"
    if isinstance(expr, Star):
        inner = expr.inner
        text = format_control(inner)
        if isinstance(inner, (Concat, Union)):
            text = "(" + text + ")"
        return text + "*"
    if isinstance(expr, Union):
        return "|".join(format_control(o) for o in expr.options)
    out = ""
    for part in expr.parts:
        text = format_control(part)
        if isinstance(part, Union):
            text = "(" + text + ")"
        # keep "ab" + "c" from fusing into one name
        if out and out[-1].isalpha() and (text[0].isalnum() or text[0] == "_"):
            out += " "
        out += text
    return out


def symbols(expr: ControlExpr) -> set[str]:
    if isinstance(expr, Symbol):
        return {expr.name}
    if isinstance(expr, (Star, Group)):
        return symbols(expr.inner)
    children = expr.parts if isinstance(expr, Concat) else expr.options
    return set().union(*(symbols(c) for c in children))


# -- NFA ------------------------------------------------------------------


@dataclass(frozen=True)
class ControlNfa:
    """Thompson NFA. ``moves[s]`` maps a name to target states; ``eps[s]`` lists epsilon targets."""

    n_states: int
    start: int
    accept: frozenset
    moves: tuple
    eps: tuple

    def closure(self, states) -> frozenset:
        stack = list(states)
        seen = set(stack)
        while stack:
            s = stack.pop()
            for t in self.eps[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def step(self, states, name: str) -> frozenset:
        nxt = set()
        for s in states:
            nxt.update(self.moves[s].get(name, ()))
        return self.closure(nxt)

    def accepts(self, word) -> bool:
        current = self.closure([self.start])
        for name in word:
            current = self.step(current, name)
            if not current:
                return False
        return bool(current & self.accept)


def compile_nfa(expr: ControlExpr) -> ControlNfa:
    moves: list[dict[str, set[int]]] = []
    eps: list[set[int]] = []

    def new() -> int:
        moves.append({})
        eps.append(set())
        return len(moves) - 1

    def build(e) -> tuple[int, int]:
        if isinstance(e, Symbol):
            s, t = new(), new()
            moves[s].setdefault(e.name, set()).add(t)
            return s, t
        if isinstance(e, Group):
            return build(e.inner)
        if isinstance(e, Concat):
            first_s, prev_t = build(e.parts[0])
            for part in e.parts[1:]:
                s, t = build(part)
                eps[prev_t].add(s)
                prev_t = t
            return first_s, prev_t
        if isinstance(e, Union):
            s, t = new(), new()
            for option in e.options:
                os_, ot = build(option)
                eps[s].add(os_)
                eps[ot].add(t)
            return s, t
        s, t = new(), new()
        is_, it = build(e.inner)
        eps[s].update((is_, t))
        eps[it].update((is_, t))
        return s, t

    start, accept = build(expr)
    return ControlNfa(
        n_states=len(moves),
        start=start,
        accept=frozenset([accept]),
        moves=tuple({k: frozenset(v) for k, v in m.items()} for m in moves),
        eps=tuple(frozenset(x) for x in eps),
    )


def accepts(expr: ControlExpr, word) -> bool:
    return compile_nfa(expr).accepts(list(word))


# -- enumeration ----------------------------------------------------------


def _language(expr: ControlExpr, max_len: int) -> set[tuple]:
    if isinstance(expr, Symbol):
        return {(expr.name,)} if max_len >= 1 else set()
    if isinstance(expr, Group):
        return _language(expr.inner, max_len)
    if isinstance(expr, Union):
        return set().union(*(_language(o, max_len) for o in expr.options))
    if isinstance(expr, Concat):
        words = {()}
        for part in expr.parts:
            lang = _language(part, max_len)
            words = {w + v for w in words for v in lang if len(w) + len(v) <= max_len}
        return words
    inner = _language(expr.inner, max_len)
    words = {()}
    frontier = {()}
    while frontier:
        frontier = {w + v for w in frontier for v in inner if v and len(w) + len(v) <= max_len}
        frontier -= words
        words |= frontier
    return words


def enumerate_words(expr: ControlExpr, max_len: int) -> list[list[str]]:
    """All words of the language up to ``max_len``, shortest first, then lexicographic.

    Computed structurally from the expression tree, without the NFA, so it
    can serve as an independent check on ``accepts``.
    """
    if max_len > MAX_ENUM_LEN:
        raise ValueError(f"max_len {max_len} exceeds guard of {MAX_ENUM_LEN}")
    if max_len < 0:
        return []
    return [list(w) for w in sorted(_language(expr, max_len), key=lambda w: (len(w), w))]


# -- sampling -------------------------------------------------------------


@dataclass(frozen=True)
class Prng:
    """32-bit linear congruential generator; a value, never mutated."""

    state: int

    def __post_init__(self) -> None:
        if not 0 <= self.state < LCG_M:
            raise ValueError(f"seed must be a 32-bit unsigned integer, got {self.state}")

    def next(self) -> tuple[int, Prng]:
        value = (LCG_A * self.state + LCG_C) % LCG_M
        return value, Prng(value)

    def stream(self) -> Iterator[int]:
        rng = self
        while True:
            value, rng = rng.next()
            yield value


def _postorder_choices(expr) -> Iterator:
    """Star and union nodes in the textual order of their operators."""
    if isinstance(expr, Symbol):
        return
    if isinstance(expr, (Star, Group)):
        yield from _postorder_choices(expr.inner)
        if isinstance(expr, Star):
            yield expr
        return
    children = expr.parts if isinstance(expr, Concat) else expr.options
    for c in children:
        yield from _postorder_choices(c)
    if isinstance(expr, Union):
        yield expr


def sample_word(expr: ControlExpr, seed: int, limit: int, mode: str = PAPER_LITERAL) -> list[str]:
    """Draw a word from the language, as Reg() does.

    Each star repeats ``k = draw % limit`` times. In paper-literal mode every
    ``*`` (and every ``|``) in the expression gets one draw, taken in the
    left-to-right order of the operators in the text, and that choice is
    reused at every expansion. In per-instance mode a fresh draw is taken
    each time a star or union is reached while expanding depth-first.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    stream = Prng(seed).stream()
    out: list[str] = []

    if mode == PAPER_LITERAL:
        fixed = {}
        for node in _postorder_choices(expr):
            if id(node) in fixed:
                continue
            fixed[id(node)] = next(stream) % (limit if isinstance(node, Star) else len(node.options))
        choose = lambda node: fixed[id(node)]  # noqa: E731
    else:
        choose = lambda node: next(stream) % (  # noqa: E731
            limit if isinstance(node, Star) else len(node.options)
        )

    def expand(e) -> None:
        if isinstance(e, Symbol):
            out.append(e.name)
        elif isinstance(e, Group):
            expand(e.inner)
        elif isinstance(e, Concat):
            for part in e.parts:
                expand(part)
        elif isinstance(e, Union):
            expand(e.options[choose(e)])
        else:
            for _ in range(choose(e)):
                expand(e.inner)

    expand(expr)
    return out
