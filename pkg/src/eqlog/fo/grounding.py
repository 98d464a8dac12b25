"""Prenexing, grounding over a finite constant set, and the safe-theory pipelines.

Grounding identifies the domain with the constant set ``C`` under unique
names, so ``c = c`` becomes ``top`` and ``c = d`` becomes ``bot``.  Ground
predicate atoms keep their applied spelling (``p(c1,c2)``) as propositional
atom names.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..equilibrium import equilibrium_models
from ..errors import FormulaShapeError, UnsafeError, VerificationError
from ..ht import HTInterpretation, ht_equivalent
from ..interpolation import CwInterpolationResult, interpolate_cw
from ..syntax import (BOT, TOP, And, Atom, Bottom, Formula, Implies, Or, Theory, conj, disj,
                      simplify)
from .safety import describe, is_safe, standardize_apart
from .syntax import (Const, Equal, Exists, Forall, PredAtom, Quantified, constants_of,
                     free_vars, is_prenex, render_fo, split_prenex, substitute)

_FLIP = {Forall: Exists, Exists: Forall}


def _pull(f: Formula) -> tuple[list, Formula]:
    """Prefix and matrix of ``f``, assuming its bound variables are pairwise distinct."""
    if isinstance(f, Quantified):
        prefix, matrix = _pull(f.body)
        return [(type(f), f.var)] + prefix, matrix
    if isinstance(f, (And, Or)):
        p1, m1 = _pull(f.left)
        p2, m2 = _pull(f.right)
        return p1 + p2, type(f)(m1, m2)
    if isinstance(f, Implies):
        p1, m1 = _pull(f.left)
        p2, m2 = _pull(f.right)
        # a quantifier leaving an antecedent changes kind
        return [(_FLIP[q], x) for q, x in p1] + p2, Implies(m1, m2)
    return [], f


def to_prenex(f: Formula, verify: bool = False) -> Formula:
    """Prenex form of the sentence ``f`` via the classical quantifier shifts.

    Bound variables are renamed apart first, so no shift can capture a
    variable.  With ``verify`` both forms are grounded over one and two
    constants and compared for HT equivalence.
    """
    if is_prenex(f):
        return f
    if free_vars(f):
        raise FormulaShapeError(f"not a sentence: free variables {sorted(free_vars(f))}")
    prefix, matrix = _pull(standardize_apart(f))
    out = matrix
    for q, x in reversed(prefix):
        out = q(x, out)
    if verify and not grounding_equivalent(f, out):
        raise VerificationError(f"prenex form of {render_fo(f)} is not equivalent after grounding")
    return out


def _fresh_constants(taken: set[str], count: int) -> list[str]:
    out, i = [], 1
    while len(out) < count:
        name = f"c{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def grounding_equivalent(f: Formula, g: Formula, sizes: Sequence[int] = (1, 2)) -> bool:
    """HT equivalence of the groundings of ``f`` and ``g`` over domains of the given extra sizes."""
    named = constants_of([f, g])
    for size in sizes:
        consts = sorted(named) + _fresh_constants(named, size)
        if not ht_equivalent(ground([f], consts), ground([g], consts)):
            return False
    return True


def _ground_term_name(t) -> str:
    if isinstance(t, Const):
        return t.name
    raise FormulaShapeError(f"variable {t} left after grounding")


def ground_formula(f: Formula, constants: Sequence[str]) -> Formula:
    """Propositional formula obtained by expanding quantifiers over ``constants``."""
    if isinstance(f, PredAtom):
        if not f.args:
            return Atom(f.pred)
        return Atom(f"{f.pred}({','.join(_ground_term_name(t) for t in f.args)})")
    if isinstance(f, Equal):
        return TOP if _ground_term_name(f.left) == _ground_term_name(f.right) else BOT
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, Quantified):
        parts = [ground_formula(substitute(f.body, {f.var: Const(c)}), constants)
                 for c in constants]
        return conj(parts) if isinstance(f, Forall) else disj(parts)
    return type(f)(ground_formula(f.left, constants), ground_formula(f.right, constants))


def _split(f: Formula) -> list[Formula]:
    if isinstance(f, And):
        return _split(f.left) + _split(f.right)
    return [f]


def ground(theory: Iterable[Formula], constants: Iterable[str]) -> Theory:
    """Ground theory Gr_C: simplified, top-level conjunctions split, ``top`` members dropped."""
    constants = sorted(set(constants))
    if not constants:
        raise FormulaShapeError("grounding needs at least one constant")
    out = []
    for f in theory:
        if free_vars(f):
            raise FormulaShapeError(f"not a sentence: free variables {sorted(free_vars(f))}")
        out.extend(g for g in _split(simplify(ground_formula(f, constants))) if g != TOP)
    return Theory(tuple(out) or (TOP,))


def require_safe(theory: Iterable[Formula]) -> None:
    """Raise ``UnsafeError`` naming the offending variables of the first unsafe sentence."""
    for f in theory:
        report = is_safe(f, auto_prenex=True)
        if not report.safe:
            names = sorted(report.nss_vars) or sorted({o.variable for o in report.offending_occurrences})
            raise UnsafeError(f"unsafe sentence {render_fo(f)}: {describe(report)} "
                              f"variable(s) {', '.join(names)}", report)


def _domain(theory, constants) -> list[str]:
    named = constants_of(list(theory))
    consts = set(named if constants is None else constants)
    if not named <= consts:
        raise FormulaShapeError(f"constants {sorted(named - consts)} missing from the domain")
    if not consts:
        raise FormulaShapeError("grounding needs at least one constant")
    return sorted(consts)


def fo_equilibrium_models_safe(theory: Sequence[Formula], constants: Iterable[str] | None = None,
                               max_atoms: int | None = None) -> list[HTInterpretation]:
    """Equilibrium models of a safe theory, computed on its grounding over ``constants``."""
    theory = list(theory)
    require_safe(theory)
    return equilibrium_models(ground(theory, _domain(theory, constants)), None, max_atoms)


def fo_interpolate_cw_safe(alpha: Sequence[Formula], beta: Formula,
                           constants: Iterable[str] | None = None,
                           max_atoms: int | None = None) -> CwInterpolationResult:
    """Closed-world interpolant for a safe theory and a ground query, at the ground level."""
    alpha = list(alpha)
    require_safe(alpha)
    if free_vars(beta) or not is_prenex(beta) or split_prenex(beta)[0]:
        raise FormulaShapeError("the query must be a quantifier-free ground formula")
    domain = _domain(alpha + [beta], constants)
    return interpolate_cw(ground(alpha, domain), ground_formula(beta, domain), max_atoms)


def domain_extension_stable(theory: Sequence[Formula], constants: Iterable[str] | None = None,
                            fresh: str | None = None, max_atoms: int | None = None) -> bool:
    """Whether adding a fresh constant leaves the equilibrium models unchanged.

    Every atom naming the fresh constant must be false in every equilibrium
    model of the extended grounding, and the remaining there-sets must
    coincide with those of the original grounding.
    """
    theory = list(theory)
    if constants is None and not constants_of(theory):
        constants = _fresh_constants(set(), 1)
    domain = _domain(theory, constants)
    if fresh is None:
        fresh = _fresh_constants(set(domain), 1)[0]
    base = {m.there for m in equilibrium_models(ground(theory, domain), None, max_atoms)}
    extended = {m.there for m in
                equilibrium_models(ground(theory, domain + [fresh]), None, max_atoms)}
    if any(_mentions(a, fresh) for there in extended for a in there):
        return False
    return base == extended


def _mentions(atom: str, constant: str) -> bool:
    if "(" not in atom:
        return False
    return constant in atom[atom.index("(") + 1:-1].split(",")
