from dataclasses import replace

import pytest

from dncgrammar.bundled import bundled_grammars, bundled_path
from dncgrammar.control import format_control, parse_control
from dncgrammar.grammar import EmbedInstruction, JumpInstruction, validate_grammar
from dncgrammar.io import grammar_from_doc, grammar_to_doc, load_grammar


@pytest.fixture
def grammars():
    return bundled_grammars()


def test_bundled_grammars_validate(grammars):
    assert sorted(grammars) == ["puzzle", "star", "wheel"]
    for g in grammars.values():
        assert validate_grammar(g) == []


def test_bundled_shapes(grammars):
    wheel, star, puzzle = grammars["wheel"], grammars["star"], grammars["puzzle"]
    assert wheel.production_names == ["p1", "p2", "p3"]
    assert format_control(wheel.control) == "p1p2*p3"
    assert star.production_names == ["p1", "p2"]
    assert format_control(star.control) == "p1*p2"
    assert star.production("p2").instructions == (JumpInstruction("c", "alpha", "a", -1),)
    assert puzzle.production_names == [f"p{i}" for i in range(1, 10)]
    assert format_control(puzzle.control) == "p1(p5p6(p7p8*p9)*p3*p4)*p2p3*p4"
    assert set(puzzle.delta) == set("belmk")


def test_dangling_target_role(grammars):
    wheel = grammars["wheel"]
    p2 = wheel.production("p2")
    broken = replace(p2, instructions=(EmbedInstruction("c", "alpha", 1, "alpha", 9),) + p2.instructions[1:])
    g = replace(wheel, productions=(wheel.productions[0], broken, wheel.productions[2]))
    diags = validate_grammar(g)
    assert len(diags) == 1
    assert "dangling target role" in diags[0]


def test_unknown_control_production(grammars):
    g = replace(grammars["wheel"], control=parse_control("p1p9*"))
    assert validate_grammar(g) == ["control: unknown production p9"]


def test_other_diagnostics(grammars):
    wheel = grammars["wheel"]
    assert len(validate_grammar(replace(wheel, delta=wheel.delta | {"zz"}))) == 1
    assert len(validate_grammar(replace(wheel, omega=frozenset({"beta"})))) == 1
    terminal_mother = replace(wheel.productions[1], mother="a")
    g = replace(wheel, productions=(wheel.productions[0], terminal_mother, wheel.productions[2]))
    assert any("terminal mother" in d for d in validate_grammar(g))
    dup = replace(wheel, productions=wheel.productions + (wheel.productions[0],))
    assert any("duplicate production" in d for d in validate_grammar(dup))
    star = grammars["star"]
    bad_jump = replace(star.productions[1], instructions=(JumpInstruction("z", "alpha", "a", -1),))
    g = replace(star, productions=(star.productions[0], bad_jump))
    assert any("jump label" in d for d in validate_grammar(g))


def test_instruction_symbols_declared(grammars):
    for g in grammars.values():
        for p in g.productions:
            for ins in p.instructions:
                assert ins.a in g.sigma
                if isinstance(ins, EmbedInstruction):
                    assert {ins.p, ins.q} <= g.gamma
                else:
                    assert ins.b in g.sigma and ins.alpha in g.gamma


def test_document_round_trip(grammars):
    for g in grammars.values():
        assert grammar_from_doc(grammar_to_doc(g)) == g


def test_json_fixtures_match_code(grammars):
    for name, g in grammars.items():
        assert load_grammar(bundled_path(name)) == g
