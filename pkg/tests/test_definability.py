import itertools

import pytest
from hypothesis import given

from eqlog.definability import (axiomatize_model_set, defining_formula, exclude,
                                is_persistence_closed, literal_definition)
from eqlog.equilibrium import equilibrium_models
from eqlog.errors import NotPersistenceClosed, NotTotalError
from eqlog.ht import HTInterpretation, ht_equivalent, ht_models
from eqlog.syntax import BOT, TOP, render, parse_formula as F

from strategies import theories

V2 = ("a", "b")


def interp(here, there, v):
    return HTInterpretation(frozenset(here), frozenset(there), tuple(v))


def all_interpretations(v):
    for there_bits in itertools.product((0, 1), repeat=len(v)):
        there = {x for x, bit in zip(v, there_bits) if bit}
        for k in range(len(there) + 1):
            for here in itertools.combinations(sorted(there), k):
                yield interp(here, there, v)


def test_defining_formula_examples():
    f = defining_formula([interp("a", "a", V2), interp("b", "b", V2)], V2)
    assert set(ht_models([f], V2)) == {interp("a", "a", V2), interp("b", "b", V2)}
    assert render(defining_formula([interp((), (), "a")], "a")) == "not a"
    assert defining_formula([], ("a",)) == BOT


def test_defining_formula_requires_total_models():
    with pytest.raises(NotTotalError):
        defining_formula([interp((), "a", "a")], "a")


def test_persistence_closure():
    assert is_persistence_closed([interp((), "a", "a"), interp("a", "a", "a")], "a")
    assert not is_persistence_closed([interp((), "a", "a")], "a")
    assert is_persistence_closed([], "a")


def test_axiomatize_examples():
    everything = list(all_interpretations(("a",)))
    assert axiomatize_model_set(everything, ("a",)) == TOP
    only_total_a = axiomatize_model_set([interp("a", "a", "a")], ("a",))
    assert ht_models([only_total_a], ("a",)) == [interp("a", "a", "a")]
    assert render(only_total_a) == "not not a & (not not a -> a)"
    with pytest.raises(NotPersistenceClosed):
        axiomatize_model_set([interp((), "a", "a")], ("a",))


@pytest.mark.parametrize("v", [("a",), ("a", "b"), ("a", "b", "c")])
def test_exclude_templates_exhaustively(v):
    universe = list(all_interpretations(v))
    for target in universe:
        models = set(ht_models([exclude(target.here, target.there, v)], v))
        if target.total:
            assert models == {m for m in universe if m.there != target.there}
        else:
            assert models == set(universe) - {target}


def test_literal_definition():
    got = literal_definition(ht_models([F("a")], V2), V2)
    assert got is not None and ht_equivalent([got], [F("a")])
    assert literal_definition([interp("a", "a", V2), interp("b", "b", V2)], V2) is None


@given(theories())
def test_defining_formula_of_equilibrium_models(theory):
    v = ("a", "b", "c")
    em = equilibrium_models(theory, v)
    f = defining_formula(em, v)
    assert ht_models([f], v) == em
    assert all(m.total for m in ht_models([f], v))


@given(theories())
def test_axiomatization_is_equivalent(theory):
    v = ("a", "b", "c")
    models = ht_models(theory, v)
    if models:
        assert ht_equivalent([axiomatize_model_set(models, v)], theory)
