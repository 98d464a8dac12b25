"""Equilibrium models, equilibrium entailment and answer sets."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable

import numpy as np

from .errors import NotTotalError
from .ht import (HTInterpretation, check_cap, evaluate, ht_entails, interpretation_from_masks,
                 is_model, model_mask)
from .syntax import Formula, Program, as_theory, vocab, vocabulary_of


def set_key(atoms) -> tuple:
    """Canonical order on atom sets: by size, then by sorted names."""
    return (len(atoms), sorted(atoms))


def is_equilibrium(m: HTInterpretation, theory) -> bool:
    """Total model of ``theory`` with no model <H', T> for H' a proper subset of T."""
    if not m.total:
        raise NotTotalError("equilibrium check requires a total interpretation")
    theory = as_theory(theory)
    if not is_model(m, theory):
        return False
    there = sorted(m.there)
    for size in range(len(there)):
        for here in combinations(there, size):
            if is_model(HTInterpretation(frozenset(here), m.there, m.vocab), theory):
                return False
    return True


def _equilibrium_masks(theory, v, max_atoms):
    tab, models = model_mask(theory, v, max_atoms)
    total = tab.here == tab.there
    blocked = np.unique(tab.there[models & ~total])
    eq = models & total & ~np.isin(tab.there, blocked)
    return tab, np.flatnonzero(eq)


def equilibrium_models(theory, v: Iterable[str] | None = None,
                       max_atoms: int | None = None) -> list[HTInterpretation]:
    """All equilibrium models of ``theory`` over ``v`` (default: its own vocabulary)."""
    theory = as_theory(theory)
    v = vocab(vocabulary_of(theory) if v is None else v)
    tab, rows = _equilibrium_masks(theory, v, max_atoms)
    return [interpretation_from_masks(int(tab.here[r]), int(tab.there[r]), v) for r in rows]


def is_coherent(theory, max_atoms: int | None = None) -> bool:
    theory = as_theory(theory)
    return bool(equilibrium_models(theory, None, max_atoms))


def _nonmonotonic_applies(theory, max_atoms) -> bool:
    return len(theory) > 0 and is_coherent(theory, max_atoms)


def entails_cw(theory, f: Formula, max_atoms: int | None = None) -> bool:
    """Closed-world equilibrium entailment.

    Equilibrium models are taken over the theory's vocabulary extended by the
    query's, so atoms foreign to the theory are minimized to false.  Empty or
    incoherent theories fall back to HT consequence.
    """
    theory = as_theory(theory)
    v = vocab(vocabulary_of(theory) + vocabulary_of(f))
    check_cap(v, max_atoms)
    if not _nonmonotonic_applies(theory, max_atoms):
        return ht_entails(theory, f, max_atoms)
    tab, rows = _equilibrium_masks(theory, v, max_atoms)
    index = {a: i for i, a in enumerate(v)}
    return bool(np.all(evaluate(f, tab.values[rows], index) == 2))


def ow_expansion_rows(models, base: tuple, fresh: tuple) -> np.ndarray:
    """Rows for every expansion of ``models`` giving each fresh atom one of 3 values."""
    width = len(base) + len(fresh)
    combos = list(product((0, 1, 2), repeat=len(fresh)))
    rows = np.zeros((len(models) * len(combos), width), dtype=np.int8)
    r = 0
    for m in models:
        head = [m.value(a) for a in base]
        for c in combos:
            rows[r] = head + list(c)
            r += 1
    return rows


def entails_ow(theory, f: Formula, max_atoms: int | None = None) -> bool:
    """Open-world equilibrium entailment.

    ``f`` must hold in every expansion of every equilibrium model (over the
    theory's own vocabulary) in which query atoms foreign to the theory take
    any of their three HT values.
    """
    theory = as_theory(theory)
    base = vocabulary_of(theory)
    fresh = tuple(a for a in vocabulary_of(f) if a not in set(base))
    check_cap(base + fresh, max_atoms)
    if not _nonmonotonic_applies(theory, max_atoms):
        return ht_entails(theory, f, max_atoms)
    models = equilibrium_models(theory, base, max_atoms)
    rows = ow_expansion_rows(models, base, fresh)
    index = {a: i for i, a in enumerate(base + fresh)}
    return bool(np.all(evaluate(f, rows, index) == 2))


def answer_sets(program: Program, max_atoms: int | None = None) -> list[frozenset]:
    """Answer sets as the there-sets of the program's equilibrium models."""
    theory = as_theory(program)
    return [m.there for m in equilibrium_models(theory, vocabulary_of(program), max_atoms)]


def _classical_model(atoms: frozenset, rules) -> bool:
    return all(not set(pos) <= atoms or bool(atoms.intersection(heads)) for heads, pos in rules)


def answer_sets_via_reduct(program: Program, max_atoms: int | None = None) -> list[frozenset]:
    """Answer sets by the reduct definition, independent of HT semantics.

    T is an answer set iff it is a minimal classical model of the program
    obtained by deleting every rule whose negative body meets T and dropping
    the negative bodies of the remaining rules.
    """
    v = vocabulary_of(program)
    check_cap(v, max_atoms)
    found = []
    for size in range(len(v) + 1):
        for combo in combinations(v, size):
            t = frozenset(combo)
            reduct = [(r.heads, r.pos_body) for r in program.rules
                      if not t.intersection(r.neg_body)]
            if not _classical_model(t, reduct):
                continue
            if any(_classical_model(frozenset(sub), reduct)
                   for k in range(size) for sub in combinations(combo, k)):
                continue
            found.append(t)
    return sorted(found, key=set_key)


def entails_as(program: Program, f: Formula, max_atoms: int | None = None) -> bool:
    """Truth in all answer sets, i.e. closed-world entailment from the program."""
    return entails_cw(as_theory(program), f, max_atoms)
