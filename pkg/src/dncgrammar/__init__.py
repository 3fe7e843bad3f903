"""Directed node-replacement graph grammars with regular control, and lock-and-key plot generation."""

from .bundled import bundled_grammars
from .control import accepts, enumerate_words, parse_control, sample_word
from .grammar import EmbedInstruction, Grammar, JumpInstruction, Production, validate_grammar
from .graph import LabeledDigraph, are_isomorphic, has_directed_path, is_all_terminal, neighbors_of
from .io import export_dot, load_grammar
from .puzzle import RoleMap, classify, generate_solvable, is_solvable
from .rewrite import FirstById, SeededRandom, apply_production, derive, find_candidates, game_gen

__all__ = [
    "EmbedInstruction",
    "FirstById",
    "Grammar",
    "JumpInstruction",
    "LabeledDigraph",
    "Production",
    "RoleMap",
    "SeededRandom",
    "accepts",
    "apply_production",
    "are_isomorphic",
    "bundled_grammars",
    "classify",
    "derive",
    "enumerate_words",
    "export_dot",
    "find_candidates",
    "game_gen",
    "generate_solvable",
    "has_directed_path",
    "is_all_terminal",
    "is_solvable",
    "load_grammar",
    "neighbors_of",
    "parse_control",
    "sample_word",
    "validate_grammar",
]
