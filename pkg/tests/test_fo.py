import pytest
from hypothesis import given, strategies as st

from eqlog.errors import FormulaShapeError, ParseError, UnsafeError
from eqlog.fo.grounding import (domain_extension_stable, fo_equilibrium_models_safe,
                                fo_interpolate_cw_safe, ground, grounding_equivalent, to_prenex)
from eqlog.fo.safety import (Polarity, ThreeVal, is_safe, is_semi_safe, kleene_eval_fixfalse,
                             non_semisafe_vars, polarity_at, restricted_vars)
from eqlog.fo.syntax import (Const, Forall, PredAtom, Var, is_prenex,
                             parse_fo_formula as F, parse_fo_theory, render_fo, substitute)
from eqlog.ht import ht_equivalent
from eqlog.syntax import parse_formula, render

SAFE_EXAMPLE = "forall X (not q(X) -> (r | not p(X)))"


def test_parse_and_render_roundtrip():
    for text in [SAFE_EXAMPLE, "exists X Y (p(X,Y) & X = Y)", "forall X (X = c -> p(X))",
                 "not exists X p(X)", "(forall X p(X)) & q"]:
        f = F(text)
        assert F(render_fo(f)) == f


def test_term_grammar():
    assert F("p(X, c)") == PredAtom("p", (Var("X"), Const("c")))
    with pytest.raises(ParseError):
        Var("x")
    with pytest.raises(ParseError):
        F("X")


@pytest.mark.parametrize("text, expected", [
    ("p(X) | q", set()),
    ("X = Y", set()),
    ("X = a", {"X"}),
    ("p(X) & q(Y)", {"X", "Y"}),
])
def test_restricted_vars(text, expected):
    assert restricted_vars(F(text)) == expected


@pytest.mark.parametrize("text, expected", [
    ("not p(X) -> (q(X) -> r(X))", set()),
    ("p(X) | q -> r(X)", {"X"}),
    ("not not p(X) & not r(X) -> q(X)", {"X"}),
])
def test_non_semisafe_vars(text, expected):
    assert non_semisafe_vars(F(text)) == expected


def test_quantifier_inside_matrix_rejected():
    with pytest.raises(FormulaShapeError):
        restricted_vars(F("forall X p(X)"))


def test_semi_safety():
    assert is_semi_safe(F("forall X (p(X) | q -> not r(X))"))
    assert not is_semi_safe(F("forall X (p(X) | q -> r(X))"))
    assert is_semi_safe(F("p(c) -> q"))
    with pytest.raises(FormulaShapeError):
        is_semi_safe(F("not exists X p(X)"))


@pytest.mark.parametrize("text, value", [
    ("not q(X) -> (r | not p(X))", ThreeVal.TRUE),
    ("q(X)", ThreeVal.FALSE),
    ("r", ThreeVal.UNDEFINED),
])
def test_kleene_fixfalse(text, value):
    assert kleene_eval_fixfalse(F(text), "X") is value
    assert ThreeVal.FALSE < ThreeVal.UNDEFINED < ThreeVal.TRUE


def test_polarity_flips_in_antecedents():
    matrix = F("not q(X) -> (r | not p(X))")
    assert polarity_at(matrix, (0, 0)) is Polarity.POSITIVE
    assert polarity_at(matrix, (1, 1, 0)) is Polarity.NEGATIVE
    assert polarity_at(matrix, ()) is Polarity.POSITIVE


@pytest.mark.parametrize("text, safe, semi", [
    (SAFE_EXAMPLE, True, True),
    ("forall X ((not not p(X) & q(X)) -> r)", True, True),
    ("forall X Y (not p(X,Y) -> q(X,Y))", False, False),
    ("forall X (not q(X) -> r)", False, True),
])
def test_safety_verdicts(text, safe, semi):
    report = is_safe(F(text))
    assert (report.safe, report.semi_safe) == (safe, semi)
    assert not report.safe or report.semi_safe


def test_safety_preconditions():
    with pytest.raises(FormulaShapeError):
        is_safe(F("p(X)"))
    with pytest.raises(FormulaShapeError):
        is_safe(F("not exists X p(X)"))
    # the only occurrence of X is negative, so the prenex form is safe
    assert is_safe(F("not exists X p(X)"), auto_prenex=True).safe


@given(st.sampled_from(["Y", "Z", "W1"]))
def test_safety_invariant_under_renaming(name):
    for text in [SAFE_EXAMPLE, "forall X (p(X) | q -> r(X))", "forall X (not q(X) -> r)"]:
        f = F(text)
        renamed = Forall(name, substitute(f.body, {"X": Var(name)}))
        before, after = is_safe(f), is_safe(renamed)
        assert (after.safe, after.semi_safe) == (before.safe, before.semi_safe)
        assert len(after.nss_vars) == len(before.nss_vars)
        assert [o.path for o in after.offending_occurrences] == \
            [o.path for o in before.offending_occurrences]


@pytest.mark.parametrize("text", [
    "not exists X p(X)",
    "(forall X p(X)) & q",
    "(exists X p(X)) -> forall Y (q(Y) | exists X r(X))",
    "forall X ((forall Y e(X,Y)) -> p(X))",
    "(exists X p(X)) | not forall X q(X)",
])
def test_prenexing_is_verified_by_grounding(text):
    f = F(text)
    g = to_prenex(f, verify=True)
    assert is_prenex(g) and grounding_equivalent(f, g)


def test_prenex_examples():
    assert to_prenex(F("not exists X p(X)")) == F("forall X not p(X)")
    assert to_prenex(F("(forall X p(X)) & q")) == F("forall X (p(X) & q)")
    already = F(SAFE_EXAMPLE)
    assert to_prenex(already) is already


def test_ground_examples():
    got = ground([F(SAFE_EXAMPLE)], ["c1", "c2"])
    assert [render(g) for g in got] == ["not q(c1) -> r | not p(c1)", "not q(c2) -> r | not p(c2)"]
    assert [render(g) for g in ground([F("exists X p(X)")], ["c"])] == ["p(c)"]
    assert [render(g) for g in ground([F("forall X (X = c -> p(X))")], ["c", "d"])] == ["p(c)"]
    with pytest.raises(FormulaShapeError):
        ground([F("p(c)")], [])
    with pytest.raises(FormulaShapeError):
        ground([F("p(X)")], ["c"])


def test_equilibrium_models_of_safe_theories():
    (m,) = fo_equilibrium_models_safe([F(SAFE_EXAMPLE)], ["c"])
    assert m.there == frozenset()
    (m,) = fo_equilibrium_models_safe([F("p(c)"), F(SAFE_EXAMPLE)], ["c"])
    assert m.total and m.there == {"p(c)", "r"}
    with pytest.raises(UnsafeError, match="unsafe"):
        fo_equilibrium_models_safe([F("forall X Y (not p(X,Y) -> q(X,Y))")], ["a"])


def test_fo_interpolation():
    result = fo_interpolate_cw_safe([F("p(c)"), F("forall X (p(X) -> r)")], F("r | s(c)"), ["c"])
    assert ht_equivalent([result.interpolant], [parse_formula("r")])
    assert result.difference_atoms == ("s(c)",) and result.verified
    result = fo_interpolate_cw_safe([F("p(c)")], F("p(c)"), ["c"])
    assert render(result.interpolant) == "p(c)"
    with pytest.raises(UnsafeError):
        fo_interpolate_cw_safe([F("forall X (not q(X) -> r)")], F("r | s(c)"), ["c"])
    with pytest.raises(FormulaShapeError):
        fo_interpolate_cw_safe([F("p(c)")], F("exists X p(X)"), ["c"])


def test_semi_safe_but_unsafe_theory_depends_on_domain():
    theory = [F("q(c)"), F("forall X (not q(X) -> r)")]
    assert not domain_extension_stable(theory)


def test_domain_extension_on_safe_examples():
    for theory in (parse_fo_theory(f"{SAFE_EXAMPLE}."),
                   parse_fo_theory(f"p(c). {SAFE_EXAMPLE}."),
                   parse_fo_theory("q(c). forall X ((not not p(X) & q(X)) -> r)."),
                   parse_fo_theory("p(a). p(b). forall X (p(X) & not q(X) -> s(X)).")):
        assert all(is_safe(f, auto_prenex=True).safe for f in theory)
        assert domain_extension_stable(theory)
