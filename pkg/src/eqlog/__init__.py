"""Equilibrium logic and answer set programming toolkit.

HT models, equilibrium models and answer sets, closed- and open-world
equilibrium entailment, verified interpolants, forgetting for disjunctive
programs, and safety analysis plus grounding for function-free first-order
theories.
"""

from .definability import axiomatize_model_set, defining_formula, is_persistence_closed
from .equilibrium import (answer_sets, answer_sets_via_reduct, entails_as, entails_cw, entails_ow,
                          equilibrium_models, is_coherent, is_equilibrium)
from .errors import (CapExceeded, EqlogError, FormulaShapeError, IncoherentError, NotEntailed,
                     NotPersistenceClosed, NotTotalError, ParseError, UnsafeError,
                     VerificationError, VocabularyError)
from .forgetting import forget_atom, forget_set, uniform_interpolant_asp
from .ht import (HTInterpretation, World, ht_countermodel, ht_entails, ht_equivalent, ht_models,
                 ht_satisfies, ht_valid, is_model)
from .interpolation import (CwInterpolationResult, InseparabilityResult, ht_interpolant,
                            inseparable, interpolate_cw, interpolate_ow, projectively_equivalent,
                            uniform_interpolant_ht)
from .syntax import (BOT, TOP, And, Atom, Bottom, Formula, Implies, Or, Program, Rule, Theory,
                     parse_formula, parse_program, parse_theory, render, vocabulary_of)

__all__ = [
    "BOT", "TOP", "And", "Atom", "Bottom", "CapExceeded", "CwInterpolationResult", "EqlogError",
    "Formula", "FormulaShapeError", "HTInterpretation", "Implies", "IncoherentError",
    "InseparabilityResult", "NotEntailed", "NotPersistenceClosed", "NotTotalError", "Or",
    "ParseError", "Program", "Rule", "Theory", "UnsafeError", "VerificationError",
    "VocabularyError", "World", "answer_sets", "answer_sets_via_reduct", "axiomatize_model_set",
    "defining_formula", "entails_as", "entails_cw", "entails_ow", "equilibrium_models",
    "forget_atom", "forget_set", "ht_countermodel", "ht_entails", "ht_equivalent",
    "ht_interpolant", "ht_models", "ht_satisfies", "ht_valid", "inseparable", "interpolate_cw",
    "interpolate_ow", "is_coherent", "is_equilibrium", "is_model", "is_persistence_closed",
    "parse_formula", "parse_program", "parse_theory", "projectively_equivalent", "render",
    "uniform_interpolant_asp", "uniform_interpolant_ht", "vocabulary_of",
]
