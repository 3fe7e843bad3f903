import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dncgrammar.bundled import bundled_grammars
from dncgrammar.control import (
    MODES,
    PAPER_LITERAL,
    PER_INSTANCE,
    Concat,
    ControlSyntaxError,
    Group,
    Prng,
    Star,
    Symbol,
    Union,
    accepts,
    enumerate_words,
    format_control,
    parse_control,
    sample_word,
)

PUZZLE = "p1(p5p6(p7p8*p9)*p3*p4)*p2p3*p4"


def w(text):
    return text.split()


def test_parse_wheel_control():
    assert parse_control("p1p2*p3") == Concat((Symbol("p1"), Star(Symbol("p2")), Symbol("p3")))
    assert parse_control(" p1 p2 * p3 ") == parse_control("p1p2*p3")


def star_depth(e):
    if isinstance(e, Symbol):
        return 0
    if isinstance(e, Star):
        return 1 + star_depth(e.inner)
    if isinstance(e, Group):
        return star_depth(e.inner)
    kids = e.parts if isinstance(e, Concat) else e.options
    return max(star_depth(k) for k in kids)


def test_parse_puzzle_control():
    expr = parse_control(PUZZLE)
    assert star_depth(expr) == 3
    assert format_control(expr) == PUZZLE
    assert expr.parts[0] == Symbol("p1")
    assert isinstance(expr.parts[1], Star) and isinstance(expr.parts[1].inner, Group)


def test_names_are_maximal():
    assert parse_control("p12") == Symbol("p12")
    assert parse_control("rule_a rule_b") == Concat((Symbol("rule_a"), Symbol("rule_b")))


@pytest.mark.parametrize(
    "text, offset",
    [("p1)(", 2), ("", 0), ("(p1", 0), ("*p1", 0), ("p1|*", 3), ("p1 $", 3), ("()", 1)],
)
def test_parse_errors(text, offset):
    with pytest.raises(ControlSyntaxError) as info:
        parse_control(text)
    assert info.value.offset == offset


def test_union_parses_and_formats():
    expr = parse_control("p1(p2|p3)*")
    assert expr == Concat((Symbol("p1"), Star(Group(Union((Symbol("p2"), Symbol("p3")))))))
    assert parse_control(format_control(expr)) == expr
    bare = Concat((Union((Symbol("a"), Symbol("b"))), Symbol("c")))
    assert accepts(parse_control(format_control(bare)), ["b", "c"])


@pytest.mark.parametrize(
    "word, expected",
    [("p1 p2 p2 p3", True), ("p1 p3", True), ("p1 p3 p2", False), ("p2 p3", False), ("", False)],
)
def test_accepts_wheel(word, expected):
    assert accepts(parse_control("p1p2*p3"), w(word)) is expected


def test_accepts_puzzle_words():
    expr = parse_control(PUZZLE)
    assert accepts(expr, w("p1 p2 p3 p3 p4"))
    assert accepts(expr, w("p1 p5 p6 p3 p3 p4 p2 p3 p3 p4"))
    assert not accepts(expr, w("p1 p5 p6 p2 p4"))


def test_enumerate_examples():
    assert enumerate_words(parse_control("p1p2*p3"), 4) == [
        w("p1 p3"),
        w("p1 p2 p3"),
        w("p1 p2 p2 p3"),
    ]
    assert enumerate_words(parse_control("p1"), 0) == []
    assert enumerate_words(parse_control("p1*"), 2) == [[], ["p1"], ["p1", "p1"]]
    with pytest.raises(ValueError):
        enumerate_words(parse_control("p1"), 13)


def test_prng_stream():
    # 1664525 * 1 + 1013904223
    assert Prng(1).next()[0] == 1015568748
    assert Prng(0).next()[0] == 1013904223
    with pytest.raises(ValueError):
        Prng(2**32)


def test_sample_limit_one_gives_no_repetitions():
    expr = parse_control("p1p2*p3")
    for mode in MODES:
        for seed in (0, 1, 99, 2**32 - 1):
            assert sample_word(expr, seed, 1, mode) == w("p1 p3")


def test_sample_seed_zero_limit_four():
    # 1013904223 % 4 == 3
    assert sample_word(parse_control("p1p2*p3"), 0, 4, PAPER_LITERAL) == w("p1 p2 p2 p2 p3")


def test_sample_finds_game_plot_words():
    # located by scanning seeds 0..10^4 in paper-literal mode at limit 3
    expr = parse_control(PUZZLE)
    assert sample_word(expr, 2, 3, PAPER_LITERAL) == w("p1 p2 p3 p3 p4")
    assert sample_word(expr, 47, 3, PAPER_LITERAL) == w("p1 p5 p6 p3 p3 p4 p2 p3 p3 p4")


def test_literal_mode_fixes_inner_counts():
    # one draw for p2*, one for the outer star, in operator order
    expr = parse_control("(p1p2*)*")
    for seed in range(50):
        word = sample_word(expr, seed, 4, PAPER_LITERAL)
        groups = "".join("|" if x == "p1" else "x" for x in word).split("|")[1:]
        assert len(set(groups)) <= 1
        rng = Prng(seed)
        inner, rng = rng.next()
        outer, rng = rng.next()
        assert word == (["p1"] + ["p2"] * (inner % 4)) * (outer % 4)


def test_per_instance_mode_varies_inner_counts():
    expr = parse_control("(p1p2*)*")
    varied = False
    for seed in range(50):
        word = sample_word(expr, seed, 4, PER_INSTANCE)
        groups = "".join("|" if x == "p1" else "x" for x in word).split("|")[1:]
        varied |= len(set(groups)) > 1
    assert varied


def test_sample_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sample_word(parse_control("p1"), 0, 0)
    with pytest.raises(ValueError):
        sample_word(parse_control("p1"), 0, 1, "weird")


# -- properties -----------------------------------------------------------

names = st.sampled_from(["p1", "p2", "p3", "q"])


def exprs():
    return st.recursive(
        names.map(Symbol),
        lambda inner: st.one_of(
            st.lists(inner, min_size=2, max_size=3).map(lambda xs: Concat(tuple(xs))),
            st.lists(inner, min_size=2, max_size=3).map(lambda xs: Group(Union(tuple(xs)))),
            inner.map(lambda x: Star(Group(x) if isinstance(x, Concat) else x)),
        ),
        max_leaves=8,
    )


@settings(max_examples=200, deadline=None)
@given(exprs(), st.integers(0, 2**32 - 1), st.integers(1, 5), st.sampled_from(MODES))
def test_samples_are_accepted(expr, seed, limit, mode):
    word = sample_word(expr, seed, limit, mode)
    assert accepts(expr, word)
    assert word == sample_word(expr, seed, limit, mode)


@settings(max_examples=100, deadline=None)
@given(exprs())
def test_format_round_trip(expr):
    # nested Concat flattens on reparse, so compare text and language
    text = format_control(expr)
    again = parse_control(text)
    assert format_control(again) == text
    assert enumerate_words(again, 4) == enumerate_words(expr, 4)


@settings(max_examples=100, deadline=None)
@given(exprs(), st.lists(names, max_size=5))
def test_accepts_matches_enumeration_random(expr, word):
    assert accepts(expr, word) == (word in enumerate_words(expr, len(word)))


def test_accepts_matches_enumeration_bundled():
    for g in bundled_grammars().values():
        alphabet = g.production_names
        language = {tuple(x) for x in enumerate_words(g.control, 8)}
        for n in range(0, 9 if len(alphabet) <= 3 else 6):
            for word in itertools.product(alphabet, repeat=n):
                assert accepts(g.control, word) == (word in language)
        # longer words for the puzzle control, checked from the language side
        for word in language:
            assert accepts(g.control, word)
