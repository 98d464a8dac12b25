import pytest
from hypothesis import given, settings

from eqlog.errors import ParseError
from eqlog.syntax import (BOT, TOP, And, Atom, Implies, Or, Program, Rule, Theory, neg,
                          parse_formula, parse_program, parse_theory, render, rule_to_formula,
                          vocabulary_of)

from strategies import formulas, programs, rules

a, b, c = Atom("a"), Atom("b"), Atom("c")


@pytest.mark.parametrize("text, expected", [
    ("not a -> b", Implies(Implies(a, BOT), b)),
    ("a & b | c", Or(And(a, b), c)),
    ("a -> b -> c", Implies(a, Implies(b, c))),
    ("-a", neg(a)),
    ("top", TOP),
    ("bot", BOT),
    ("a & b & c", And(And(a, b), c)),
])
def test_parse_formula(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize("text, rule", [
    ("b :- not a.", Rule(("b",), (), ("a",))),
    ("a | b.", Rule(("a", "b"))),
    (":- a.", Rule((), ("a",))),
    ("h :- b, not c.", Rule(("h",), ("b",), ("c",))),
])
def test_parse_rule(text, rule):
    assert parse_program(text).rules == (rule,)


def test_comments_and_ground_atoms():
    prog = parse_program("% header\np(c1,c2) :- q. % trailing\n")
    assert prog.rules == (Rule(("p(c1,c2)",), ("q",)),)


@pytest.mark.parametrize("text", ["a &", "(a", "a b", "a :- not .", "A.", "a -> ", "a | | b."])
def test_malformed_input_is_rejected(text):
    with pytest.raises(ParseError):
        parse_program(text) if ":-" in text or text.endswith(".") else parse_formula(text)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_formula("a &\n  & b")
    assert info.value.line == 2


def test_repeated_head_atom_rejected():
    with pytest.raises(ParseError):
        Rule(("a", "a"))


@pytest.mark.parametrize("rule, formula", [
    (Rule(("b",), ("c",), ("a",)), Implies(And(c, neg(a)), b)),
    (Rule(("a", "b")), Or(a, b)),
    (Rule((), ("a",)), Implies(a, BOT)),
])
def test_rule_to_formula(rule, formula):
    assert rule_to_formula(rule) == formula


def test_vocabulary():
    assert vocabulary_of(And(a, neg(b))) == ("a", "b")
    assert vocabulary_of(BOT) == ()
    assert vocabulary_of(parse_program("b :- not a.")) == ("a", "b")


@pytest.mark.parametrize("formula, text", [
    (Implies(a, BOT), "not a"),
    (Or(And(a, b), c), "a & b | c"),
    (BOT, "bot"),
    (And(a, Or(b, c)), "a & (b | c)"),
    (Implies(Implies(a, b), c), "(a -> b) -> c"),
])
def test_render(formula, text):
    assert render(formula) == text


def test_render_programs_and_theories():
    assert render(Program(())) == "% empty program"
    assert render(parse_program("b :- not c.")) == "b :- not c."
    assert render(Theory((a, neg(b)))) == "a.\nnot b."


@settings(max_examples=300)
@given(formulas(max_leaves=16))
def test_render_parse_roundtrip(f):
    assert parse_formula(render(f)) == f


@given(programs())
def test_program_roundtrip(p):
    assert parse_program(render(p)) == p


@given(rules())
def test_rule_translation_preserves_vocabulary(r):
    assert vocabulary_of(rule_to_formula(r)) == vocabulary_of(Program((r,)))


def test_theory_parse():
    assert parse_theory("a. not b -> c.").formulas == (a, Implies(neg(b), c))
