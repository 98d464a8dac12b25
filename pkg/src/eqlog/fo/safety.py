"""Semi-safety and safety of function-free prenex sentences.

Negation is ``f -> bot`` throughout, so every recursion below sees only
atoms, equalities, ``bot``, conjunction, disjunction and implication.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import FormulaShapeError
from ..syntax import And, Bottom, Formula, Implies, Or
from .syntax import (Equal, Exists, Forall, PredAtom, Quantified, Var, free_vars,
                     is_prenex, render_fo, split_prenex, substitute, term_vars)


def _require_quantifier_free(f: Formula):
    if isinstance(f, Quantified):
        raise FormulaShapeError("quantifier encountered in a quantifier-free position")


def restricted_vars(f: Formula) -> frozenset:
    _require_quantifier_free(f)
    if isinstance(f, Equal):
        if isinstance(f.left, Var) and isinstance(f.right, Var):
            return frozenset()
        return frozenset(term_vars(f))
    if isinstance(f, PredAtom):
        return frozenset(term_vars(f))
    if isinstance(f, Bottom):
        return frozenset()
    if isinstance(f, And):
        return restricted_vars(f.left) | restricted_vars(f.right)
    if isinstance(f, Or):
        return restricted_vars(f.left) & restricted_vars(f.right)
    if isinstance(f, Implies):
        # still walk the operands so nested quantifiers are rejected
        restricted_vars(f.left), restricted_vars(f.right)
        return frozenset()
    raise TypeError(f"unexpected node {f!r}")


def non_semisafe_vars(f: Formula) -> frozenset:
    _require_quantifier_free(f)
    if isinstance(f, (PredAtom, Equal)):
        return frozenset(term_vars(f))
    if isinstance(f, Bottom):
        return frozenset()
    if isinstance(f, (And, Or)):
        return non_semisafe_vars(f.left) | non_semisafe_vars(f.right)
    if isinstance(f, Implies):
        return non_semisafe_vars(f.right) - restricted_vars(f.left)
    raise TypeError(f"unexpected node {f!r}")


def is_semi_safe(f: Formula) -> bool:
    if not is_prenex(f):
        raise FormulaShapeError("semi-safety is defined for prenex formulas")
    _, matrix = split_prenex(f)
    return not non_semisafe_vars(matrix)


class ThreeVal(enum.Enum):
    """Kleene truth values 0 < 1/2 < 1."""

    FALSE = Fraction(0)
    UNDEFINED = Fraction(1, 2)
    TRUE = Fraction(1)

    @classmethod
    def of(cls, value) -> "ThreeVal":
        return cls(Fraction(value))

    def __lt__(self, other):
        return self.value < other.value

    def __le__(self, other):
        return self.value <= other.value

    def __str__(self):
        return str(self.value)


def kleene_eval_fixfalse(f: Formula, x: str) -> ThreeVal:
    """Kleene value of ``f`` when atoms mentioning ``x`` are 0 and all others 1/2."""
    _require_quantifier_free(f)
    if isinstance(f, (PredAtom, Equal)):
        return ThreeVal.FALSE if x in term_vars(f) else ThreeVal.UNDEFINED
    if isinstance(f, Bottom):
        return ThreeVal.FALSE
    left = kleene_eval_fixfalse(f.left, x)
    right = kleene_eval_fixfalse(f.right, x)
    if isinstance(f, And):
        return min(left, right)
    if isinstance(f, Or):
        return max(left, right)
    if isinstance(f, Implies):
        return ThreeVal(max(1 - left.value, right.value))
    raise TypeError(f"unexpected node {f!r}")


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    def flip(self) -> "Polarity":
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


def subterm(f: Formula, path: tuple) -> Formula:
    for step in path:
        f = f.left if step == 0 else f.right
    return f


def polarity_at(f: Formula, path: tuple) -> Polarity:
    """Positive iff an even number of implications have the position in their antecedent."""
    pol = Polarity.POSITIVE
    for step in path:
        if isinstance(f, Implies) and step == 0:
            pol = pol.flip()
        f = f.left if step == 0 else f.right
    return pol


def atom_occurrences(matrix: Formula, x: str, path: tuple = ()):
    """Paths of the atoms of ``matrix`` in which variable ``x`` occurs."""
    if isinstance(matrix, (PredAtom, Equal)):
        if x in term_vars(matrix):
            yield path
    elif isinstance(matrix, (And, Or, Implies)):
        yield from atom_occurrences(matrix.left, x, path + (0,))
        yield from atom_occurrences(matrix.right, x, path + (1,))


_WANTED = {
    (Forall, Polarity.POSITIVE): ThreeVal.TRUE,
    (Forall, Polarity.NEGATIVE): ThreeVal.FALSE,
    (Exists, Polarity.POSITIVE): ThreeVal.FALSE,
    (Exists, Polarity.NEGATIVE): ThreeVal.TRUE,
}


def weak_restriction_witness(matrix: Formula, path: tuple, x: str, quantifier: type):
    """Path of the smallest subformula containing the occurrence that weakly restricts it."""
    for k in range(len(path), -1, -1):
        prefix = path[:k]
        sub = subterm(matrix, prefix)
        if kleene_eval_fixfalse(sub, x) is _WANTED[quantifier, polarity_at(matrix, prefix)]:
            return prefix
    return None


@dataclass(frozen=True)
class Occurrence:
    variable: str
    path: tuple
    quantifier: str
    polarity: Polarity

    def __str__(self):
        where = ".".join(map(str, self.path)) or "root"
        return f"{self.variable} at {where} ({self.quantifier}, {self.polarity.value})"


@dataclass(frozen=True)
class SafetyReport:
    semi_safe: bool
    nss_vars: frozenset
    safe: bool
    offending_occurrences: tuple = field(default=())
    formula: Formula | None = field(default=None, compare=False)

    @property
    def verdict(self) -> str:
        if self.safe:
            return "safe"
        return "semi-safe" if self.semi_safe else "unsafe"


def standardize_apart(f: Formula) -> Formula:
    """Rename bound variables so each quantifier binds a distinct name."""
    used: set[str] = set()
    _collect_vars(f, used)
    seen: set[str] = set()

    def fresh(base):
        i = 1
        while f"{base}{i}" in used:
            i += 1
        name = f"{base}{i}"
        used.add(name)
        return name

    def walk(g):
        if isinstance(g, Quantified):
            x = g.var
            if x in seen:
                y = fresh(x)
                body = substitute(g.body, {x: Var(y)})
                x = y
            else:
                body = g.body
            seen.add(x)
            return type(g)(x, walk(body))
        if isinstance(g, (And, Or, Implies)):
            return type(g)(walk(g.left), walk(g.right))
        return g

    return walk(f)


def _collect_vars(f, out: set):
    if isinstance(f, Quantified):
        out.add(f.var)
        _collect_vars(f.body, out)
    elif isinstance(f, (And, Or, Implies)):
        _collect_vars(f.left, out)
        _collect_vars(f.right, out)
    else:
        out.update(term_vars(f))


def is_safe(f: Formula, auto_prenex: bool = False) -> SafetyReport:
    """Safety verdict for a sentence.

    Every positive occurrence of a universally quantified variable and every
    negative occurrence of an existentially quantified one must be weakly
    restricted, on top of semi-safety.
    """
    if free_vars(f):
        raise FormulaShapeError(f"not a sentence: free variables {sorted(free_vars(f))}")
    if not is_prenex(f):
        if not auto_prenex:
            raise FormulaShapeError("formula is not in prenex form")
        from .grounding import to_prenex
        f = to_prenex(f)
    f = standardize_apart(f)
    prefix, matrix = split_prenex(f)
    nss = non_semisafe_vars(matrix)
    offending = []
    for quantifier, x in prefix:
        for path in atom_occurrences(matrix, x):
            pol = polarity_at(matrix, path)
            needed = (quantifier is Forall) == (pol is Polarity.POSITIVE)
            if needed and weak_restriction_witness(matrix, path, x, quantifier) is None:
                word = "forall" if quantifier is Forall else "exists"
                offending.append(Occurrence(x, path, word, pol))
    semi = not nss
    return SafetyReport(semi, frozenset(nss), semi and not offending, tuple(offending), f)


def describe(report: SafetyReport) -> str:
    """One-line verdict in the CLI's ``SAFE | SEMI-SAFE | UNSAFE(vars)`` format."""
    if report.safe:
        return "SAFE"
    if report.semi_safe:
        return "SEMI-SAFE"
    return f"UNSAFE({','.join(sorted(report.nss_vars))})"


__all__ = [
    "Occurrence", "Polarity", "SafetyReport", "ThreeVal", "atom_occurrences", "describe",
    "is_safe", "is_semi_safe", "kleene_eval_fixfalse", "non_semisafe_vars", "polarity_at",
    "render_fo", "restricted_vars", "standardize_apart", "weak_restriction_witness",
]
