import itertools

import pytest
from hypothesis import given

from eqlog.errors import CapExceeded, VocabularyError
from eqlog.ht import (HTInterpretation, World, check_cap, ht_countermodel, ht_entails,
                      ht_equivalence_witness, ht_equivalent, ht_models, ht_satisfies, ht_valid,
                      is_model)
from eqlog.syntax import TOP, And, Atom, Implies, Or, Theory, neg, parse_formula as F

from strategies import formulas, theories

HERE, THERE = World.HERE, World.THERE
HOSOI = F("a | (not b | (a -> b))")


def interp(here, there, v):
    return HTInterpretation(frozenset(here), frozenset(there), tuple(v))


def all_interpretations(v):
    for there_bits in itertools.product((0, 1), repeat=len(v)):
        there = {x for x, bit in zip(v, there_bits) if bit}
        for k in range(len(there) + 1):
            for here in itertools.combinations(sorted(there), k):
                yield interp(here, there, v)


def test_interpretation_validation():
    with pytest.raises(VocabularyError):
        interp({"a"}, set(), "a")
    with pytest.raises(VocabularyError):
        interp(set(), {"z"}, ("a",))


def test_satisfaction_clauses():
    m = interp(set(), {"a"}, ("a",))
    assert ht_satisfies(m, HERE, F("not not a"))
    assert not ht_satisfies(m, HERE, F("a"))
    assert not ht_satisfies(m, HERE, F("a | not a"))
    assert ht_satisfies(m, THERE, F("a | not a"))


def test_hosoi_axiom_everywhere():
    for m in all_interpretations(("a", "b")):
        assert ht_satisfies(m, HERE, HOSOI) and ht_satisfies(m, THERE, HOSOI)


def test_models_of_disjunction():
    got = ht_models([F("a | b")], ("a", "b"))
    assert [(set(m.here), set(m.there)) for m in got] == [
        ({"a"}, {"a"}), ({"a"}, {"a", "b"}), ({"b"}, {"b"}), ({"b"}, {"a", "b"}),
        ({"a", "b"}, {"a", "b"})]


def test_models_degenerate():
    assert len(ht_models([], ("a",))) == 3
    assert ht_models([F("bot")], ("a",)) == []


def test_models_agree_with_clause_oracle():
    theory = Theory((F("not a -> b"), F("c | not c -> a")))
    v = ("a", "b", "c")
    fast = set(ht_models(theory, v))
    slow = {m for m in all_interpretations(v) if is_model(m, theory)}
    assert fast == slow


@pytest.mark.parametrize("premises, goal, expected", [
    (["a", "a -> b"], "b", True),
    (["not not a"], "a", False),
    ([], "a | (not b | (a -> b))", True),
])
def test_entailment(premises, goal, expected):
    assert ht_entails([F(p) for p in premises], F(goal)) is expected


def test_validity_and_countermodel():
    assert ht_valid(F("a -> a"))
    assert not ht_valid(F("a | not a"))
    assert ht_valid(HOSOI)
    cm = ht_countermodel([], F("a | not a"))
    assert (cm.here, cm.there) == (frozenset(), frozenset({"a"}))


def test_equivalence():
    left, right = [F("a | b")], [F("not a -> b"), F("not b -> a")]
    assert not ht_equivalent(left, right)
    w = ht_equivalence_witness(left, right)
    assert (w.here, w.there) == (frozenset(), frozenset({"a", "b"}))
    assert ht_equivalent(left, left)
    assert ht_equivalent([F("not not not a")], [F("not a")])


def test_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        check_cap(tuple("abcdef"), max_atoms=5)
    monkeypatch.setenv("EQLOG_MAX_ATOMS", "2")
    with pytest.raises(CapExceeded):
        ht_models([F("a & b & c")], ("a", "b", "c"))
    assert len(ht_models([F("a & b & c")], ("a", "b", "c"), max_atoms=3)) == 1


@given(formulas())
def test_persistence(f):
    v = ("a", "b", "c")
    for m in all_interpretations(v):
        total = interp(m.there, m.there, v)
        if ht_satisfies(m, HERE, f):
            assert ht_satisfies(m, THERE, f)
        assert ht_satisfies(m, THERE, f) == ht_satisfies(total, HERE, f)


@given(formulas())
def test_negation_depends_only_on_there(f):
    v = ("a", "b", "c")
    negated = neg(f)
    for m in all_interpretations(v):
        total = interp(m.there, m.there, v)
        assert ht_satisfies(m, HERE, negated) == ht_satisfies(total, HERE, negated)


@given(theories(max_size=2), formulas())
def test_signature_irrelevance(theory, f):
    base = ht_entails(theory, f)
    extended = theory.formulas + (Or(Atom("e"), TOP),)
    assert ht_entails(Theory(extended), f) == base


@given(theories(max_size=2))
def test_restriction_preserves_models(theory):
    v = ("a", "b", "c", "d")
    for m in ht_models(theory, v):
        assert is_model(m.restrict(("a", "b", "c")), theory)


@given(formulas(max_leaves=3), formulas(max_leaves=3), formulas(max_leaves=3))
def test_intuitionistic_axioms(p, q, r):
    k = Implies(p, Implies(q, p))
    s = Implies(Implies(p, Implies(q, r)), Implies(Implies(p, q), Implies(p, r)))
    conj_elim = Implies(And(p, q), p)
    disj_elim = Implies(Implies(p, r), Implies(Implies(q, r), Implies(Or(p, q), r)))
    for axiom in (k, s, conj_elim, disj_elim):
        assert ht_valid(axiom)
